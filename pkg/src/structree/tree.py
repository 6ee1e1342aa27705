"""Structure tree of a nested cut family and the queries it answers.

A tree vertex is an orientation signature: bit ``j`` records whether the
vertex lies on the representative side of pair ``j``. The vertex at the
representative end of pair ``j`` is computed from that cut alone (a vertex
lies in ``B`` if the cut is inside ``B`` or the cut's complement is strictly
inside ``B``); two signatures are joined iff they differ in exactly one bit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Literal

from .errors import (
    InternalConsistencyError,
    NestingViolationError,
    PreconditionError,
)
from .flow import max_flow
from .network import Cut, CutPair, Network, Vertex, crosses_mask
from .nest import NestedCutSystem


@dataclass(frozen=True)
class StructureTree:
    net: Network
    pairs: tuple[CutPair, ...]  # tree edge j is pairs[j]
    signatures: tuple[int, ...]  # tree vertex i, ascending
    edges: tuple[tuple[int, int], ...]  # (low id, high id) per pair
    capacities: tuple[int, ...]
    nu: tuple[int, ...]  # network vertex -> tree vertex id
    system: NestedCutSystem | None = field(default=None, compare=False, repr=False)
    incident: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        inc: list[list[int]] = [[] for _ in self.signatures]
        for j, (a, b) in enumerate(self.edges):
            inc[a].append(j)
            inc[b].append(j)
        object.__setattr__(self, "incident", tuple(tuple(x) for x in inc))

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.nu)

    def preimage(self, i: int) -> list[int]:
        return [x for x, t in enumerate(self.nu) if t == i]

    def label(self, i: int) -> str | None:
        names = [self.net.vertices[x] for x in self.preimage(i)]
        return ",".join(names) if names else None

    def degree(self, i: int) -> int:
        return len(self.incident[i])

    def other(self, j: int, i: int) -> int:
        a, b = self.edges[j]
        return b if a == i else a

    def path(self, a: int, b: int) -> list[int]:
        """Edge indices of the geodesic from tree vertex ``a`` to ``b``, in order."""
        parent = {a: (-1, -1)}
        queue = deque([a])
        while queue and b not in parent:
            x = queue.popleft()
            for j in self.incident[x]:
                y = self.other(j, x)
                if y not in parent:
                    parent[y] = (x, j)
                    queue.append(y)
        out = []
        y = b
        while y != a:
            x, j = parent[y]
            out.append(j)
            y = x
        return out[::-1]

    def side_vertices(self, j: int, representative: bool = True) -> frozenset[int]:
        """Tree vertices on the representative side of edge ``j`` (or the other)."""
        want = 1 if representative else 0
        return frozenset(
            i for i, s in enumerate(self.signatures) if (s >> j) & 1 == want
        )


def _iota(a: int, masks: list[int], full: int) -> int:
    comp = full ^ a
    sig = 0
    for j, b in enumerate(masks):
        if a & ~b == 0 or (comp & ~b == 0 and comp != b):
            sig |= 1 << j
    return sig


def build_tree(source: NestedCutSystem | Iterable[CutPair], net: Network | None = None) -> StructureTree:
    """Tree whose edges are the pairs of a nested family."""
    if isinstance(source, NestedCutSystem):
        system, net, pairs = source, source.net, tuple(source.pairs)
    else:
        system = None
        pairs = tuple(sorted(set(source)))
        if net is None:
            if not pairs:
                raise PreconditionError("an empty family needs an explicit network")
            net = pairs[0].net
    full = net.full
    masks = [p.mask for p in pairs]
    for (i, a), (j, b) in combinations(enumerate(masks), 2):
        if crosses_mask(a, b, full):
            raise NestingViolationError(f"{pairs[i]!r} crosses {pairs[j]!r}")
    ends = [(_iota(m, masks, full), _iota(full ^ m, masks, full)) for m in masks]
    sigs = sorted({s for e in ends for s in e} or {0})
    idx = {s: i for i, s in enumerate(sigs)}
    edges = []
    for j, (x, y) in enumerate(ends):
        if x ^ y != 1 << j:
            raise InternalConsistencyError(f"edge ends of {pairs[j]!r} differ off its own bit")
        a, b = idx[x], idx[y]
        edges.append((min(a, b), max(a, b)))
    nu = []
    for x in range(net.n):
        sig = sum(1 << j for j, m in enumerate(masks) if m >> x & 1)
        if sig not in idx:
            raise InternalConsistencyError(
                f"vertex {net.vertices[x]!r} has a signature that is not a tree vertex"
            )
        nu.append(idx[sig])
    tree = StructureTree(
        net,
        pairs,
        tuple(sigs),
        tuple(edges),
        tuple(p.capacity for p in pairs),
        tuple(nu),
        system,
    )
    if len(sigs) != len(pairs) + 1 or not _spans(tree):
        raise InternalConsistencyError("nested family did not produce a tree")
    return tree


def _spans(tree: StructureTree) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for j in tree.incident[x]:
            y = tree.other(j, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(tree.signatures)


def nu_map(net: Network, tree: StructureTree) -> dict[str, int]:
    if tree.net is not net:
        raise PreconditionError("tree was built over a different network")
    return {net.vertices[x]: t for x, t in enumerate(tree.nu)}


def _endpoints(tree: StructureTree, s: Vertex, t: Vertex) -> tuple[int, int]:
    si, ti = tree.net.vertex(s), tree.net.vertex(t)
    if si == ti:
        raise PreconditionError("source and sink must differ")
    return si, ti


def tree_max_flow(tree: StructureTree, s: Vertex, t: Vertex) -> int:
    """Smallest edge capacity on the tree path between the images of s and t."""
    si, ti = _endpoints(tree, s, t)
    path = tree.path(tree.nu[si], tree.nu[ti])
    if not path:
        raise PreconditionError("s and t share a tree vertex; the family does not separate them")
    return min(tree.capacities[j] for j in path)


def tree_min_cut(tree: StructureTree, s: Vertex, t: Vertex) -> Cut:
    """Side containing s of the minimum geodesic edge closest to s."""
    si, ti = _endpoints(tree, s, t)
    path = tree.path(tree.nu[si], tree.nu[ti])
    if not path:
        raise PreconditionError("s and t share a tree vertex; the family does not separate them")
    low = min(tree.capacities[j] for j in path)
    j = next(j for j in path if tree.capacities[j] == low)
    return tree.pairs[j].side_containing(si)


def edge_realization(tree: StructureTree, j: int) -> tuple[int, int]:
    """Vertices s, t whose geodesic uses edge ``j`` and whose min cut value is its capacity."""
    if not tree.pairs:
        raise PreconditionError("the tree has no edges")
    pair, cap = tree.pairs[j], tree.capacities[j]
    net = tree.net
    for s, t in combinations(range(net.n), 2):
        if not pair.separates(s, t):
            continue
        lam = tree.system.lam(s, t) if tree.system is not None else max_flow(net, s, t).value
        if lam == cap:
            return s, t
    raise InternalConsistencyError(f"no vertex pair realizes edge {pair!r}")


@dataclass(frozen=True)
class GomoryHuTree:
    """Tree on the network's own vertices; edge ``(x, y, c, pair)``."""

    net: Network
    edges: tuple[tuple[int, int, int, CutPair], ...]
    contracted: tuple[CutPair, ...]

    def path_min(self, s: Vertex, t: Vertex) -> int:
        si, ti = self.net.vertex(s), self.net.vertex(t)
        adj: dict[int, list[tuple[int, int]]] = {}
        for x, y, c, _ in self.edges:
            adj.setdefault(x, []).append((y, c))
            adj.setdefault(y, []).append((x, c))
        best = {si: None}
        queue = deque([si])
        while queue:
            x = queue.popleft()
            for y, c in adj.get(x, ()):
                if y not in best:
                    prev = best[x]
                    best[y] = c if prev is None else min(prev, c)
                    queue.append(y)
        if best.get(ti) is None:
            raise PreconditionError("vertices are not joined in the tree")
        return best[ti]


def gomory_hu(tree: StructureTree) -> GomoryHuTree:
    """Contract, at every vertex outside the image, an incident edge of largest capacity."""
    if len(set(tree.nu)) != len(tree.nu):
        raise PreconditionError("the vertex map is not injective")
    group = list(range(len(tree.signatures)))

    def find(i: int) -> int:
        while group[i] != i:
            group[i] = group[group[i]]
            i = group[i]
        return i

    contracted = []
    changed = True
    while changed:
        changed = False
        for i in range(len(tree.signatures)):
            g = find(i)
            if g != i or g in {find(t) for t in tree.nu}:
                continue
            live = [
                j
                for k in range(len(tree.signatures))
                if find(k) == g
                for j in tree.incident[k]
                if find(tree.edges[j][0]) != find(tree.edges[j][1])
            ]
            j = min(live, key=lambda j: (-tree.capacities[j], tree.pairs[j].mask))
            a, b = (find(x) for x in tree.edges[j])
            other = b if a == g else a
            group[g] = other
            contracted.append(tree.pairs[j])
            changed = True
    rep = {find(t): x for x, t in enumerate(tree.nu)}
    edges = []
    for j, (a, b) in enumerate(tree.edges):
        ga, gb = find(a), find(b)
        if ga != gb:
            x, y = sorted((rep[ga], rep[gb]))
            edges.append((x, y, tree.capacities[j], tree.pairs[j]))
    return GomoryHuTree(tree.net, tuple(edges), tuple(contracted))


@dataclass(frozen=True)
class FactorGraph:
    """Graph at a tree vertex.

    Vertices are ``("nu", x)`` for network vertices mapped to the host and
    ``("rho", j)`` for each incident tree edge ``j`` (its far side collapsed).
    ``edges`` holds ``(end, end, network edge index)`` and may repeat ends.
    """

    host: int
    nu_vertices: tuple[int, ...]
    rho_vertices: tuple[int, ...]
    edges: tuple[tuple[tuple[str, int], tuple[str, int], int], ...]

    def vertices(self) -> list[tuple[str, int]]:
        return [("nu", x) for x in self.nu_vertices] + [("rho", j) for j in self.rho_vertices]

    def degree(self, v: tuple[str, int]) -> int:
        return sum((a == v) + (b == v) for a, b, _ in self.edges)

    def is_connected(self) -> bool:
        vs = self.vertices()
        if not vs:
            return True
        adj: dict = {v: [] for v in vs}
        for a, b, _ in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {vs[0]}
        stack = [vs[0]]
        while stack:
            for y in adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(vs)


def factor_graph(net: Network, tree: StructureTree, v: int) -> FactorGraph:
    if not 0 <= v < len(tree.signatures):
        raise PreconditionError(f"tree vertex {v} does not exist")
    sig = tree.signatures[v]
    full = net.full
    # far side of incident edge j, i.e. the side of the cut not containing v
    far = {}
    for j in tree.incident[v]:
        m = tree.pairs[j].mask
        far[j] = full ^ m if sig >> j & 1 else m

    def end(x: int) -> tuple[str, int]:
        if tree.nu[x] == v:
            return ("nu", x)
        for j, m in far.items():
            if m >> x & 1:
                return ("rho", j)
        raise InternalConsistencyError(f"vertex {net.vertices[x]!r} lies in no branch at {v}")

    edges = []
    for k, (x, y) in enumerate(net.edges):
        in_cob = any(((m >> x) ^ (m >> y)) & 1 for m in far.values())
        if in_cob or (tree.nu[x] == v and tree.nu[y] == v):
            edges.append((end(x), end(y), k))
    return FactorGraph(v, tuple(tree.preimage(v)), tuple(sorted(far)), tuple(edges))


def canonical_expression(
    tree: StructureTree,
    cut: Cut,
    *,
    twig: Literal["smallest", "largest"] = "smallest",
) -> frozenset[int]:
    """Set of tree vertices whose preimage under the vertex map is ``cut``.

    A cut nested with every tree edge is its own branch, or a union of
    branches pointing at the tree vertex it determines. Otherwise the cut
    is split along a twig of the subtree of crossing edges and the two
    expressions are added (symmetric difference). ``twig`` picks which twig
    is taken first; the result does not depend on it.
    """
    if cut.net is not tree.net:
        raise PreconditionError("cut is bound to a different network")
    if not cut.proper:
        raise PreconditionError("canonical expressions are defined for proper cuts")
    return _express(tree, cut.members, twig)


def _express(tree: StructureTree, a: int, twig: str) -> frozenset[int]:
    full = tree.net.full
    masks = [p.mask for p in tree.pairs]
    crossing = [j for j, m in enumerate(masks) if crosses_mask(a, m, full)]
    if not crossing:
        return _express_nested(tree, a, masks)
    fdeg: dict[int, int] = {}
    for j in crossing:
        for x in tree.edges[j]:
            fdeg[x] = fdeg.get(x, 0) + 1
    twigs = [j for j in crossing if any(fdeg[x] == 1 for x in tree.edges[j])]
    j = (min if twig == "smallest" else max)(twigs, key=lambda j: masks[j])
    leaf = next(x for x in tree.edges[j] if fdeg[x] == 1)
    near = masks[j] if tree.signatures[leaf] >> j & 1 else full ^ masks[j]
    for c in (near, full ^ near):
        if not any(crosses_mask(a & c, m, full) for m in masks):
            return _express(tree, a & c, twig) ^ _express(tree, a & ~c & full, twig)
    raise InternalConsistencyError("no orientation of the twig leaves a nested corner")


def _express_nested(tree: StructureTree, a: int, masks: list[int]) -> frozenset[int]:
    full = tree.net.full
    for j, m in enumerate(masks):
        if a == m:
            return tree.side_vertices(j, True)
        if a == full ^ m:
            return tree.side_vertices(j, False)
    comp = full ^ a
    z_sig = 0
    for j, m in enumerate(masks):
        # the chosen side of pair j is the one inside a or inside its complement
        if not (m & comp == 0 or m & a == 0):
            z_sig |= 1 << j
    try:
        z = tree.signatures.index(z_sig)
    except ValueError:
        raise InternalConsistencyError("nested cut determines no tree vertex") from None
    inside, outside = [], []
    for j in tree.incident[z]:
        branch = full ^ masks[j] if z_sig >> j & 1 else masks[j]
        (inside if branch & comp == 0 else outside).append((j, branch))
    cover = 0
    for _, b in inside:
        cover |= b
    if cover == a:
        out: set[int] = set()
        for j, _ in inside:
            out |= tree.side_vertices(j, not z_sig >> j & 1)
        return frozenset(out)
    cover = 0
    for _, b in outside:
        cover |= b
    if cover == comp:
        out = set(range(len(tree.signatures)))
        for j, _ in outside:
            out -= tree.side_vertices(j, not z_sig >> j & 1)
        return frozenset(out)
    raise PreconditionError("cut separates vertices the nested family does not separate")


def preimage_mask(tree: StructureTree, vertex_set: Iterable[int]) -> int:
    chosen = set(vertex_set)
    return sum(1 << x for x, t in enumerate(tree.nu) if t in chosen)
