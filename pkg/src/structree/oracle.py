"""Brute-force ground truth, written independently of the main pipeline.

Capacities are recomputed here from the raw edge list with plain loops;
subsets are walked in Gray-code order so that each step flips one vertex
and adjusts the running capacity by that vertex's incident edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import CapacityGuardError, PreconditionError
from .network import Network

ORACLE_LIMIT = 16
RING_LIMIT = 8


def _neighbours(net: Network) -> list[list[tuple[int, int]]]:
    nb: list[list[tuple[int, int]]] = [[] for _ in range(net.n)]
    for (u, v), c in zip(net.edges, net.capacity):
        nb[u].append((v, c))
        nb[v].append((u, c))
    return nb


def _gray_walk(net: Network, free: list[int], base: int):
    """Yield ``(set, capacity)`` for ``base`` plus every subset of ``free``."""
    nb = _neighbours(net)
    members = [False] * net.n
    for x in range(net.n):
        members[x] = bool(base >> x & 1)
    cap = 0
    for (u, v), c in zip(net.edges, net.capacity):
        if members[u] != members[v]:
            cap += c
    current = base
    yield current, cap
    for step in range(1, 1 << len(free)):
        x = free[(step & -step).bit_length() - 1]
        # flipping x toggles the crossing status of each incident edge
        for y, c in nb[x]:
            cap += -c if members[y] != members[x] else c
        members[x] = not members[x]
        current ^= 1 << x
        yield current, cap


@dataclass(frozen=True)
class OracleMinCut:
    value: int
    cuts: tuple[frozenset[int], ...]  # source sides, sorted

    @property
    def count(self) -> int:
        return len(self.cuts)


def oracle_min_cut(net: Network, s, t, limit: int = ORACLE_LIMIT) -> OracleMinCut:
    """Minimum (s, t)-cut value and every source side that attains it."""
    if net.n > limit:
        raise CapacityGuardError(net.n, limit, "oracle scan")
    si, ti = net.vertex(s), net.vertex(t)
    if si == ti:
        raise PreconditionError("source and sink must differ")
    free = [x for x in range(net.n) if x not in (si, ti)]
    best = None
    hits: list[int] = []
    for members, cap in _gray_walk(net, free, 1 << si):
        if best is None or cap < best:
            best, hits = cap, [members]
        elif cap == best:
            hits.append(members)
    cuts = sorted(
        (frozenset(x for x in range(net.n) if m >> x & 1) for m in hits),
        key=lambda c: sorted(c),
    )
    return OracleMinCut(best, tuple(cuts))


def all_cut_capacities(net: Network, limit: int = ORACLE_LIMIT) -> np.ndarray:
    """Capacity of every vertex set containing vertex 0, indexed by its bit mask >> 1."""
    if net.n > limit:
        raise CapacityGuardError(net.n, limit, "oracle scan")
    out = np.zeros(1 << (net.n - 1), dtype=np.int64)
    for members, cap in _gray_walk(net, list(range(1, net.n)), 1):
        out[members >> 1] = cap
    return out


def oracle_lambda(net: Network, limit: int = ORACLE_LIMIT) -> list[list[int]]:
    """All-pairs minimum cut values from one scan over every cut."""
    caps = all_cut_capacities(net, limit)
    sets = np.arange(len(caps), dtype=np.int64) << 1 | 1
    lam = [[0] * net.n for _ in range(net.n)]
    for u, v in combinations(range(net.n), 2):
        apart = ((sets >> u) ^ (sets >> v)) & 1
        lam[u][v] = lam[v][u] = int(caps[apart.astype(bool)].min())
    return lam


def oracle_connected(net: Network, members: frozenset[int] | set[int]) -> bool:
    """Connectivity of the induced subgraph by repeated edge relaxation."""
    members = set(members)
    if not members:
        return False
    reached = {min(members)}
    grew = True
    while grew:
        grew = False
        for u, v in net.edges:
            if u in members and v in members and (u in reached) != (v in reached):
                reached.update((u, v))
                grew = True
    return reached == members


def oracle_nested(a: frozenset[int], b: frozenset[int], everything: frozenset[int]) -> bool:
    ac, bc = everything - a, everything - b
    return not (a & b and a & bc and ac & b and ac & bc)


def nesting_matrix(net: Network, family: list[frozenset[int]]) -> list[list[bool]]:
    everything = frozenset(range(net.n))
    return [[oracle_nested(a, b, everything) for b in family] for a in family]


def is_laminar(net: Network, family: list[frozenset[int]]) -> bool:
    return all(all(row) for row in nesting_matrix(net, family))


def oracle_ring_membership(
    net: Network, target: frozenset[int] | set[int], generators, limit: int = RING_LIMIT
) -> bool:
    """Whether ``target`` lies in the Boolean ring generated by ``generators``.

    The ring is closed under symmetric difference and intersection and
    contains the empty set; the closure is computed by saturation.
    """
    if net.n > limit:
        raise CapacityGuardError(net.n, limit, "ring closure")
    ring = {frozenset()} | {frozenset(g) for g in generators}
    frontier = set(ring)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(ring):
                for c in (a ^ b, a & b):
                    if c not in ring and c not in new:
                        new.add(c)
        ring |= new
        frontier = new
    return frozenset(target) in ring


@dataclass
class OracleReport:
    lam: list[list[int]]
    min_cuts: dict[tuple[int, int], tuple[frozenset[int], ...]] = field(default_factory=dict)
    nesting: list[list[bool]] | None = None

    def count(self, u: int, v: int) -> int:
        return len(self.min_cuts[(min(u, v), max(u, v))])


def oracle_report(
    net: Network,
    pairs=None,
    family: list[frozenset[int]] | None = None,
    limit: int = ORACLE_LIMIT,
) -> OracleReport:
    lam = oracle_lambda(net, limit)
    if pairs is None:
        pairs = list(combinations(range(net.n), 2))
    cuts = {}
    for u, v in pairs:
        u, v = sorted((net.vertex(u), net.vertex(v)))
        cuts[(u, v)] = oracle_min_cut(net, u, v, limit).cuts
    return OracleReport(lam, cuts, nesting_matrix(net, family) if family is not None else None)
