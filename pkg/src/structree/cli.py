"""Command-line front end: ``structree <command> --input NET ...``.

Exit status: 0 ok, 1 verification failure, 2 bad input, 3 vertex limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from . import corpus, verify
from .atlas import DEFAULT_LIMIT, thin_cuts
from .errors import CapacityGuardError, ParseError, PreconditionError, StructreeError, VertexLookupError
from .io import dumps_tree_dot, dumps_tree_json, load_network, parse_tree_json
from .nest import build_canonical_nested_set, provenance
from .network import Cut, Network
from .oracle import oracle_lambda
from .tree import StructureTree, build_tree, canonical_expression, factor_graph, gomory_hu, tree_max_flow, tree_min_cut

OK, FAILED, BAD_INPUT, TOO_BIG = 0, 1, 2, 3


@dataclass(frozen=True)
class CommandConfig:
    input: Path
    fmt: str | None = None
    out: Path | None = None
    dot: Path | None = None
    json: bool = False
    limit: int = DEFAULT_LIMIT
    seed: int = 0
    verbose: int = 0

    def __post_init__(self) -> None:
        if self.limit < 2:
            raise PreconditionError(f"vertex limit must be at least 2, got {self.limit}")


def _default_limit() -> int:
    raw = os.environ.get("STRUCTREE_LIMIT")
    if raw is None:
        return DEFAULT_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise PreconditionError(f"STRUCTREE_LIMIT must be an integer, got {raw!r}") from None


def _write(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text)


def _emit(obj, cfg: CommandConfig) -> None:
    _write(json.dumps(obj, indent=2) + "\n", cfg.out)


def _build(cfg: CommandConfig) -> tuple[Network, StructureTree]:
    net = load_network(cfg.input, cfg.fmt)
    system = build_canonical_nested_set(net, cfg.limit)
    return net, build_tree(system)


def _tree_vertex_name(tree: StructureTree, i: int) -> str:
    label = tree.label(i)
    if label is not None:
        return label
    stars = [k for k in range(len(tree.signatures)) if tree.label(k) is None]
    return f"*{stars.index(i)}"


def cmd_build(cfg: CommandConfig) -> int:
    _, tree = _build(cfg)
    n_v, n_e = len(tree.signatures), len(tree.edges)
    hidden = n_v - len(tree.image)
    summary = {"tree_vertices": n_v, "tree_edges": n_e, "non_image": hidden}
    body = dumps_tree_json(tree)
    if cfg.dot is not None:
        cfg.dot.write_text(dumps_tree_dot(tree))
    if cfg.out is None:
        # tree document owns stdout; the summary moves to stderr
        sys.stdout.write(body)
        stream = sys.stderr
    else:
        cfg.out.write_text(body)
        stream = sys.stdout
    if cfg.json:
        stream.write(json.dumps(summary) + "\n")
    else:
        stream.write(f"tree vertices: {n_v}\ntree edges: {n_e}\nnon-image vertices: {hidden}\n")
    return OK


def cmd_query(cfg: CommandConfig, s: str, t: str, mode: str) -> int:
    net, tree = _build(cfg)
    if mode == "flow":
        value = tree_max_flow(tree, s, t)
        _write(json.dumps({"s": s, "t": t, "flow": value}) + "\n" if cfg.json else f"{value}\n", cfg.out)
    else:
        cut = tree_min_cut(tree, s, t)
        names = cut.names()
        if cfg.json:
            _write(json.dumps({"s": s, "t": t, "cut": names, "capacity": cut.capacity}) + "\n", cfg.out)
        else:
            _write(" ".join(names) + "\n", cfg.out)
    return OK


def cmd_gomory_hu(cfg: CommandConfig) -> int:
    net, tree = _build(cfg)
    gh = gomory_hu(tree)
    rows = [(net.vertices[x], net.vertices[y], c) for x, y, c, _ in gh.edges]
    if cfg.json:
        _emit({"edges": [{"u": u, "v": v, "c": c} for u, v, c in rows]}, cfg)
    else:
        _write("".join(f"{u} {v} {c}\n" for u, v, c in rows), cfg.out)
    return OK


def cmd_factors(cfg: CommandConfig, vertex: int | None) -> int:
    net, tree = _build(cfg)
    hosts = range(len(tree.signatures)) if vertex is None else [vertex]
    out = []
    for v in hosts:
        fg = factor_graph(net, tree, v)

        def name(end):
            kind, k = end
            return net.vertices[k] if kind == "nu" else f"rho{k}"

        out.append(
            {
                "host": v,
                "label": _tree_vertex_name(tree, v),
                "nu": [net.vertices[x] for x in fg.nu_vertices],
                "rho": [{"id": f"rho{j}", "cut": tree.pairs[j].names()} for j in fg.rho_vertices],
                "edges": [[name(a), name(b), net.capacity[k]] for a, b, k in fg.edges],
                "connected": fg.is_connected(),
            }
        )
    if cfg.json:
        _emit({"factors": out}, cfg)
    else:
        lines = []
        for f in out:
            lines.append(f"[{f['label']}] nu: {' '.join(f['nu']) or '-'}; rho: {' '.join(r['id'] for r in f['rho']) or '-'}")
            lines.extend(f"  {a} {b} {c}" for a, b, c in f["edges"])
        _write("\n".join(lines) + "\n", cfg.out)
    return OK


def cmd_expr(cfg: CommandConfig, members: list[str], twig: str) -> int:
    net, tree = _build(cfg)
    cut = Cut.of(net, members)
    expr = sorted(canonical_expression(tree, cut, twig=twig))
    labels = [_tree_vertex_name(tree, i) for i in expr]
    if cfg.json:
        _emit({"cut": cut.names(), "tree_vertices": expr, "labels": labels}, cfg)
    else:
        _write(" ".join(labels) + "\n", cfg.out)
    return OK


def cmd_dump_cuts(cfg: CommandConfig) -> int:
    net = load_network(cfg.input, cfg.fmt)
    _emit(provenance(build_canonical_nested_set(net, cfg.limit)), cfg)
    return OK


SUITES = ("flow", "nesting", "corners", "equivariance", "gomory-hu")


def cmd_verify(cfg: CommandConfig, suites: list[str], tree_file: Path | None, samples: int) -> int:
    net = load_network(cfg.input, cfg.fmt)
    lam = oracle_lambda(net, cfg.limit)
    rng = random.Random(cfg.seed)
    results: dict[str, list[str]] = {}
    system = build_canonical_nested_set(net, cfg.limit)
    tree = build_tree(system)
    for name in suites:
        if name == "flow":
            results[name] = verify.flow_agreement(tree, lam)
        elif name == "nesting":
            results[name] = verify.nesting(system) + verify.separation(system)
        elif name == "corners":
            strata = thin_cuts(net, cfg.limit, system.lam)
            thin = sorted({r.pair.mask for rs in strata.values() for r in rs})
            _, corners = verify.thin_corners(net, strata)
            _, split = verify.corner_nesting(net, thin, rng, samples)
            family = [p.mask for p in system.pairs]
            _, drop = verify.mu_decrease(net, family, verify.tight_masks(net, cfg.limit), rng, samples)
            results[name] = corners + split + drop
        elif name == "equivariance":
            results[name] = verify.equivariance(net, rng, cfg.limit)
        elif name == "gomory-hu":
            results[name] = verify.gomory_hu_agreement(tree, lam)
    if tree_file is not None:
        doc = parse_tree_json(tree_file.read_text())
        results["tree-file"] = verify.tree_document(net, doc, lam)
    failed = False
    report = {}
    for name, problems in results.items():
        report[name] = problems
        failed |= bool(problems)
        if not cfg.json:
            status = "ok" if not problems else f"FAILED ({len(problems)})"
            print(f"{name}: {status}")
            for p in problems[: 5 if cfg.verbose == 0 else None]:
                print(f"  {p}")
    if cfg.json:
        print(json.dumps({"ok": not failed, "suites": report}, indent=2))
    return FAILED if failed else OK


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", type=Path, help="network file (JSON or edge list)")
    src.add_argument("--corpus", metavar="NAME", help="bundled network, e.g. fig2")
    common.add_argument("--format", dest="fmt", choices=("json", "edgelist"))
    common.add_argument("--out", type=Path)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--limit", type=int, help="vertex limit for exhaustive scans")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-v", "--verbose", action="count", default=0)

    p = argparse.ArgumentParser(prog="structree", description="Structure trees of finite networks.")
    sub = p.add_subparsers(dest="command", required=True)
    b = sub.add_parser("build", parents=[common], help="build and export the structure tree")
    b.add_argument("--dot", type=Path)
    q = sub.add_parser("query", parents=[common], help="max-flow value or a minimum cut")
    q.add_argument("mode", choices=("flow", "cut"))
    q.add_argument("s")
    q.add_argument("t")
    sub.add_parser("gomory-hu", parents=[common], help="contracted tree on the network vertices")
    f = sub.add_parser("factors", parents=[common], help="factor graphs at tree vertices")
    f.add_argument("--vertex", type=int, help="tree vertex id (default: all)")
    e = sub.add_parser("expr", parents=[common], help="express a vertex set by tree vertices")
    e.add_argument("members", nargs="+")
    e.add_argument("--twig", choices=("smallest", "largest"), default="smallest")
    sub.add_parser("dump-cuts", parents=[common], help="per-level thin cuts with their status")
    v = sub.add_parser("verify", parents=[common], help="check the tree against brute force")
    v.add_argument("--suite", action="append", choices=SUITES, help="repeatable; default all")
    v.add_argument("--tree", type=Path, help="also check an exported tree file")
    v.add_argument("--samples", type=int, default=500)
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.corpus is not None:
            matches = [p for p in corpus.corpus_files() if p.stem == args.corpus]
            if not matches:
                raise ParseError(f"no bundled network named {args.corpus!r}", "--corpus")
            args.input = matches[0]
        cfg = CommandConfig(
            input=args.input,
            fmt=args.fmt,
            out=args.out,
            dot=getattr(args, "dot", None),
            json=args.json,
            limit=args.limit if args.limit is not None else _default_limit(),
            seed=args.seed,
            verbose=args.verbose,
        )
        cmd = args.command
        if cmd == "build":
            return cmd_build(cfg)
        if cmd == "query":
            return cmd_query(cfg, args.s, args.t, args.mode)
        if cmd == "gomory-hu":
            return cmd_gomory_hu(cfg)
        if cmd == "factors":
            return cmd_factors(cfg, args.vertex)
        if cmd == "expr":
            return cmd_expr(cfg, args.members, args.twig)
        if cmd == "dump-cuts":
            return cmd_dump_cuts(cfg)
        return cmd_verify(cfg, args.suite or list(SUITES), args.tree, args.samples)
    except CapacityGuardError as exc:
        print(f"error: {exc} (raise --limit or STRUCTREE_LIMIT)", file=sys.stderr)
        return TOO_BIG
    except (ParseError, VertexLookupError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except StructreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED


if __name__ == "__main__":
    sys.exit(main())
