"""Network ingestion (JSON and edge-list text) and structure-tree export."""

from __future__ import annotations

import json
from pathlib import Path
from typing import TYPE_CHECKING, Any

from .errors import ParseError, PreconditionError, VertexLookupError
from .network import Network

if TYPE_CHECKING:
    from .tree import StructureTree


def parse_json_network(text: str) -> Network:
    """Parse ``{"vertices": [...], "edges": [{"u":..,"v":..,"c":..}, ...]}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", "$")
    vertices = doc.get("vertices")
    edges = doc.get("edges")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError("must be a list of vertex name strings", "$.vertices")
    if not isinstance(edges, list):
        raise ParseError("must be a list of edge objects", "$.edges")
    known = set(vertices)
    seen: set[frozenset[str]] = set()
    triples = []
    for k, e in enumerate(edges):
        where = f"$.edges[{k}]"
        if not isinstance(e, dict):
            raise ParseError("edge must be an object", where)
        for key in ("u", "v", "c"):
            if key not in e:
                raise ParseError(f"missing field {key!r}", where)
        u, v, c = e["u"], e["v"], e["c"]
        if not isinstance(u, str) or not isinstance(v, str):
            raise ParseError("endpoints must be vertex name strings", where)
        if not isinstance(c, int) or isinstance(c, bool) or c < 1:
            raise ParseError("capacity must be an integer >= 1", f"{where}.c")
        for end in (u, v):
            if end not in known:
                raise ParseError(f"endpoint {end!r} is not a listed vertex", where)
        _check_edge(seen, u, v, where)
        triples.append((u, v, c))
    return _build(triples, vertices)


def parse_edgelist(text: str) -> Network:
    """Parse whitespace separated ``u v c`` lines; ``#`` starts a comment."""
    seen: set[frozenset[str]] = set()
    triples = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'u v c', got {len(parts)} fields", f"line {lineno}")
        u, v, c = parts
        try:
            cap = int(c)
        except ValueError:
            raise ParseError(f"capacity {c!r} is not an integer", f"line {lineno}") from None
        if cap < 1:
            raise ParseError("capacity must be >= 1", f"line {lineno}")
        _check_edge(seen, u, v, f"line {lineno}")
        triples.append((u, v, cap))
    if not triples:
        raise ParseError("no edges found")
    try:
        return _build(triples, None)
    except ParseError:
        raise
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


def _check_edge(seen: set[frozenset[str]], u: str, v: str, where: str) -> None:
    if u == v:
        raise ParseError(f"self-loop at {u!r}", where)
    key = frozenset((u, v))
    if key in seen:
        raise ParseError(f"repeated edge {u!r}-{v!r}", where)
    seen.add(key)


def _build(triples: list[tuple[str, str, int]], vertices: list[str] | None) -> Network:
    try:
        return Network.from_edges(triples, vertices=vertices)
    except VertexLookupError as exc:
        raise ParseError(str(exc), "$.edges") from None
    except PreconditionError as exc:
        raise ParseError(str(exc)) from None


def detect_format(path: str | Path) -> str:
    return "json" if str(path).lower().endswith(".json") else "edgelist"


def load_network(path: str | Path, fmt: str | None = None) -> Network:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read input: {exc.strerror}", str(p)) from None
    fmt = fmt or detect_format(p)
    if fmt == "json":
        return parse_json_network(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ParseError(f"unknown format {fmt!r}")


def network_to_json(net: Network) -> dict[str, Any]:
    return {
        "vertices": list(net.vertices),
        "edges": [
            {"u": net.vertices[u], "v": net.vertices[v], "c": c}
            for (u, v), c in zip(net.edges, net.capacity)
        ],
    }


def tree_to_json(tree: "StructureTree") -> dict[str, Any]:
    net = tree.net
    return {
        "vertices": [
            {"id": i, "label": tree.label(i)} for i in range(len(tree.signatures))
        ],
        "edges": [
            {
                "u": u,
                "v": v,
                "c": c,
                "cut": pair.names(),
            }
            for pair, (u, v), c in zip(tree.pairs, tree.edges, tree.capacities)
        ],
        "nu": {net.vertices[x]: tree.nu[x] for x in range(net.n)},
    }


def dumps_tree_json(tree: "StructureTree") -> str:
    return json.dumps(tree_to_json(tree), indent=2) + "\n"


def dumps_tree_dot(tree: "StructureTree") -> str:
    lines = ["graph structure_tree {"]
    star = 0
    for i in range(len(tree.signatures)):
        label = tree.label(i)
        if label is None:
            label = f"*{star}"
            star += 1
        lines.append(f'  {i} [label="{label}"];')
    for (u, v), c in zip(tree.edges, tree.capacities):
        lines.append(f'  {u} -- {v} [label="c={c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_tree_json(text: str) -> dict[str, Any]:
    """Structural validation of a tree JSON document; returns the decoded object."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", "$")
    for key, kind in (("vertices", list), ("edges", list), ("nu", dict)):
        if not isinstance(doc.get(key), kind):
            raise ParseError(f"missing or malformed {key!r}", f"$.{key}")
    ids = set()
    for k, v in enumerate(doc["vertices"]):
        if not isinstance(v, dict) or not isinstance(v.get("id"), int):
            raise ParseError("vertex needs an integer id", f"$.vertices[{k}]")
        ids.add(v["id"])
    for k, e in enumerate(doc["edges"]):
        where = f"$.edges[{k}]"
        if not isinstance(e, dict):
            raise ParseError("edge must be an object", where)
        if not all(isinstance(e.get(f), int) for f in ("u", "v", "c")):
            raise ParseError("edge needs integer u, v, c", where)
        if e["u"] not in ids or e["v"] not in ids:
            raise ParseError("edge endpoint is not a listed vertex id", where)
        if not isinstance(e.get("cut"), list):
            raise ParseError("edge needs a cut list", where)
    for name, vid in doc["nu"].items():
        if vid not in ids:
            raise ParseError(f"nu maps {name!r} to unknown vertex {vid!r}", "$.nu")
    return doc
