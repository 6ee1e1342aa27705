"""Verification checks shared by ``structree verify`` and the acceptance tests.

Each check returns a list of human-readable violations; empty means pass.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations

from .atlas import ThinCutRecord, enumerate_proper_cuts, mu_mask
from .flow import max_flow
from .nest import NestedCutSystem, build_canonical_nested_set
from .network import Cut, Network, crosses_mask, is_tight
from .tree import StructureTree, build_tree, gomory_hu, tree_max_flow


def flow_agreement(tree: StructureTree, oracle_lam: list[list[int]]) -> list[str]:
    """Tree geodesic minimum, max-flow value and oracle cut value agree on every pair."""
    net = tree.net
    out = []
    for s, t in combinations(range(net.n), 2):
        a = tree_max_flow(tree, s, t)
        b = max_flow(net, s, t).value
        c = oracle_lam[s][t]
        if not a == b == c:
            out.append(
                f"{net.vertices[s]}-{net.vertices[t]}: tree {a}, flow {b}, oracle {c}"
            )
    return out


def nesting(system: NestedCutSystem) -> list[str]:
    full = system.net.full
    return [
        f"{p!r} crosses {q!r}"
        for p, q in combinations(system.pairs, 2)
        if crosses_mask(p.mask, q.mask, full)
    ]


def separation(system: NestedCutSystem) -> list[str]:
    """Every vertex pair is split by some member at its min cut value."""
    net, lam = system.net, system.lam
    out = []
    for u, v in combinations(range(net.n), 2):
        if not any(p.separates(u, v) and p.capacity == lam(u, v) for p in system.pairs):
            out.append(f"no thin member separates {net.vertices[u]}, {net.vertices[v]}")
    return out


def _thin_masks(strata: dict[int, list[ThinCutRecord]], full: int) -> set[int]:
    out = set()
    for recs in strata.values():
        for r in recs:
            out.add(r.pair.mask)
            out.add(full ^ r.pair.mask)
    return out


def thin_corners(net: Network, strata: dict[int, list[ThinCutRecord]]) -> tuple[int, list[str]]:
    """For every crossing pair of thin cuts, some relabelling makes the opposite corners thin.

    Returns ``(pairs checked, violations)``.
    """
    full = net.full
    thin = _thin_masks(strata, full)
    recs = [r for rs in strata.values() for r in rs]
    checked = 0
    out = []
    for ra, rb in combinations(recs, 2):
        if ra.capacity > rb.capacity:
            ra, rb = rb, ra
        a0, b0 = ra.pair.mask, rb.pair.mask
        if not crosses_mask(a0, b0, full):
            continue
        checked += 1
        m, n = ra.capacity, rb.capacity
        ok = False
        for a in (a0, full ^ a0):
            for b in (b0, full ^ b0):
                x, y = a & ~b & full, ~a & b & full
                if (
                    x in thin
                    and y in thin
                    and net.capacity_mask(x) == m
                    and net.capacity_mask(y) == n
                ):
                    ok = True
        if not ok:
            out.append(f"corners of {ra.pair!r} and {rb.pair!r} are not thin")
    return checked, out


def corner_nesting(net: Network, masks: list[int], rng: random.Random, samples: int) -> tuple[int, list[str]]:
    """A cut nested with both members of a crossing pair is nested with all four corners."""
    full = net.full
    crossing = [(a, b) for a, b in combinations(masks, 2) if crosses_mask(a, b, full)]
    checked, out = 0, []
    if not crossing:
        return 0, out
    for _ in range(samples):
        a, b = rng.choice(crossing)
        c = rng.choice(masks)
        if crosses_mask(c, a, full) or crosses_mask(c, b, full):
            continue
        checked += 1
        for k in (a & b, a & ~b & full, ~a & b & full, ~(a | b) & full):
            if crosses_mask(c, k, full):
                out.append(f"{net.names(c)} crosses a corner of {net.names(a)}, {net.names(b)}")
                break
    return checked, out


def mu_decrease(
    net: Network,
    family: list[int],
    tight: list[int],
    rng: random.Random,
    samples: int,
) -> tuple[int, list[str]]:
    """Splitting a tight cut along a crossing family member strictly lowers the total crossings."""
    full = net.full
    checked, out = 0, []
    if not family:
        return 0, out
    for _ in range(samples):
        a = rng.choice(tight)
        if rng.random() < 0.5:
            a = full ^ a
        crossing = [b for b in family if crosses_mask(a, b, full)]
        if not crossing:
            continue
        b = rng.choice(crossing)
        if rng.random() < 0.5:
            b = full ^ b
        checked += 1
        left = mu_mask(a & b, family, full) + mu_mask(a & ~b & full, family, full)
        if not left < mu_mask(a, family, full):
            out.append(f"crossings do not drop splitting {net.names(a)} along {net.names(b)}")
    return checked, out


def tight_masks(net: Network, limit: int | None = None) -> list[int]:
    return [p.mask for p, _ in enumerate_proper_cuts(net, limit) if is_tight(net, p.representative)]


def tree_signature(tree: StructureTree):
    """Label-free description of a tree: vertices keyed by the name sets they lie in."""
    net = tree.net
    full = net.full
    keys = []
    for s in tree.signatures:
        sides = []
        for j, p in enumerate(tree.pairs):
            m = p.mask if s >> j & 1 else full ^ p.mask
            sides.append(frozenset(net.names(m)))
        keys.append(frozenset(sides))
    edges = frozenset(
        (frozenset((keys[a], keys[b])), c) for (a, b), c in zip(tree.edges, tree.capacities)
    )
    nu = {net.vertices[x]: keys[t] for x, t in enumerate(tree.nu)}
    return frozenset(keys), edges, nu


def equivariance(net: Network, rng: random.Random, limit: int | None = None) -> list[str]:
    """Building on a vertex-permuted copy gives the same family and tree up to names."""
    order = list(net.vertices)
    rng.shuffle(order)
    other = net.relabel(order)
    s1 = build_canonical_nested_set(net, limit)
    s2 = build_canonical_nested_set(other, limit)
    out = []
    if s1.as_sets() != s2.as_sets():
        out.append(f"nested family changes under vertex order {order}")
    if tree_signature(build_tree(s1)) != tree_signature(build_tree(s2)):
        out.append(f"structure tree changes under vertex order {order}")
    return out


def gomory_hu_agreement(tree: StructureTree, oracle_lam: list[list[int]]) -> list[str]:
    net = tree.net
    gh = gomory_hu(tree)
    out = []
    used = {x for e in gh.edges for x in e[:2]}
    if len(gh.edges) != net.n - 1 or (net.n > 1 and used != set(range(net.n))):
        out.append("contracted tree is not a spanning tree on the network vertices")
        return out
    for s, t in combinations(range(net.n), 2):
        got = gh.path_min(s, t)
        if got != oracle_lam[s][t]:
            out.append(f"{net.vertices[s]}-{net.vertices[t]}: contracted tree {got}, oracle {oracle_lam[s][t]}")
    return out


def tree_document(net: Network, doc: dict, oracle_lam: list[list[int]]) -> list[str]:
    """Check an exported tree JSON document against the network it claims to describe."""
    out = []
    ids = [v["id"] for v in doc["vertices"]]
    if len(set(ids)) != len(ids):
        out.append("duplicate tree vertex ids")
    edges = doc["edges"]
    if len(edges) != len(ids) - 1:
        out.append(f"{len(ids)} vertices but {len(edges)} edges: not a tree")
    adj: dict[int, list[tuple[int, int]]] = {i: [] for i in ids}
    for e in edges:
        adj[e["u"]].append((e["v"], e["c"]))
        adj[e["v"]].append((e["u"], e["c"]))
    nu = doc["nu"]
    if set(nu) != set(net.vertices):
        out.append("nu does not cover exactly the network vertices")
        return out
    for e in edges:
        try:
            cut = Cut.of(net, e["cut"])
        except Exception:
            out.append(f"edge {e['u']}-{e['v']} names unknown vertices")
            continue
        if cut.capacity != e["c"]:
            out.append(f"edge {e['u']}-{e['v']} has capacity {e['c']} but its cut has {cut.capacity}")
    if out:
        return out

    def path_min(a: int, b: int):
        best = {a: None}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            for y, c in adj[x]:
                if y not in best:
                    best[y] = c if best[x] is None else min(best[x], c)
                    queue.append(y)
        return best.get(b, "unreachable")

    for s, t in combinations(range(net.n), 2):
        got = path_min(nu[net.vertices[s]], nu[net.vertices[t]])
        if got != oracle_lam[s][t]:
            out.append(f"{net.vertices[s]}-{net.vertices[t]}: tree gives {got}, oracle {oracle_lam[s][t]}")
    return out


def random_nested_family(net: Network, tight: list[int], rng: random.Random) -> list[int]:
    """Greedy laminar subfamily of ``tight`` taken in a shuffled order."""
    full = net.full
    order = list(tight)
    rng.shuffle(order)
    family: list[int] = []
    for a in order:
        if not any(crosses_mask(a, b, full) for b in family):
            family.append(a)
    return family
