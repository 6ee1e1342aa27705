"""Network and cut model with the primitive cut predicates.

Vertex sets are Python ints used as bit vectors over the vertex ordering:
bit ``i`` is set iff vertex ``i`` is a member.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BindingError, PreconditionError, VertexLookupError

Vertex = int | str


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> list[int]:
    """Indices of the set bits, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True, eq=False)
class Network:
    """Finite simple connected graph with positive integer edge capacities.

    ``edges[k]`` is an index pair ``(u, v)`` with ``u < v``; ``capacity[k]``
    is its capacity. Instances compare by identity, which is what binds cuts
    to the network they index.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    capacity: tuple[int, ...]
    index: dict[str, int] = field(init=False, repr=False)
    # adjacency[v] = ((neighbor, edge index), ...) sorted by neighbor
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n = len(self.vertices)
        if n == 0:
            raise PreconditionError("a network needs at least one vertex")
        if len(set(self.vertices)) != n:
            raise PreconditionError("duplicate vertex names")
        if len(self.edges) != len(self.capacity):
            raise PreconditionError("edges and capacities differ in length")
        seen = set()
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for k, ((u, v), c) in enumerate(zip(self.edges, self.capacity)):
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge {k} has an endpoint out of range")
            if u == v:
                raise PreconditionError(f"edge {k} is a loop at {self.vertices[u]!r}")
            if u > v:
                raise PreconditionError(f"edge {k} is not stored as (low, high)")
            if (u, v) in seen:
                raise PreconditionError(
                    f"parallel edge {self.vertices[u]!r}-{self.vertices[v]!r}"
                )
            if not isinstance(c, int) or isinstance(c, bool) or c < 1:
                raise PreconditionError(f"edge {k} capacity must be an integer >= 1")
            seen.add((u, v))
            adj[u].append((v, k))
            adj[v].append((u, k))
        object.__setattr__(self, "index", {name: i for i, name in enumerate(self.vertices)})
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        if not self._connected(self.full):
            raise PreconditionError("network is not connected")

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[str, str, int]],
        vertices: Sequence[str] | None = None,
    ) -> "Network":
        """Build from named ``(u, v, c)`` triples.

        Vertex order is ``vertices`` if given, else order of first appearance.
        """
        triples = list(edges)
        names = list(vertices) if vertices is not None else []
        if vertices is None:
            for u, v, _ in triples:
                for x in (u, v):
                    if x not in names:
                        names.append(x)
        index = {name: i for i, name in enumerate(names)}
        pairs, caps = [], []
        for u, v, c in triples:
            if u not in index or v not in index:
                missing = u if u not in index else v
                raise VertexLookupError(f"edge endpoint {missing!r} is not a listed vertex")
            a, b = index[u], index[v]
            pairs.append((min(a, b), max(a, b)))
            caps.append(c)
        return cls(tuple(names), tuple(pairs), tuple(caps))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def full(self) -> int:
        return (1 << len(self.vertices)) - 1

    def vertex(self, v: Vertex) -> int:
        """Resolve a vertex name or index to its index."""
        if isinstance(v, str):
            try:
                return self.index[v]
            except KeyError:
                raise VertexLookupError(f"unknown vertex {v!r}") from None
        if isinstance(v, int) and not isinstance(v, bool) and 0 <= v < self.n:
            return v
        raise VertexLookupError(f"unknown vertex {v!r}")

    def mask_of(self, members: Iterable[Vertex]) -> int:
        m = 0
        for v in members:
            m |= 1 << self.vertex(v)
        return m

    def names(self, mask: int) -> list[str]:
        return [self.vertices[i] for i in bits(mask)]

    def coboundary_mask(self, mask: int) -> list[int]:
        return [
            k for k, (u, v) in enumerate(self.edges) if ((mask >> u) ^ (mask >> v)) & 1
        ]

    def capacity_mask(self, mask: int) -> int:
        total = 0
        for (u, v), c in zip(self.edges, self.capacity):
            if ((mask >> u) ^ (mask >> v)) & 1:
                total += c
        return total

    def _connected(self, mask: int) -> bool:
        """Whether the induced subgraph on a nonempty vertex set is connected."""
        if not mask:
            return False
        start = (mask & -mask).bit_length() - 1
        reached = 1 << start
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y, _ in self.adjacency[x]:
                b = 1 << y
                if mask & b and not reached & b:
                    reached |= b
                    queue.append(y)
        return reached == mask

    def relabel(self, order: Sequence[str]) -> "Network":
        """Same network with vertices listed in ``order``."""
        if sorted(order) != sorted(self.vertices):
            raise PreconditionError("order must be a permutation of the vertex names")
        triples = [
            (self.vertices[u], self.vertices[v], c)
            for (u, v), c in zip(self.edges, self.capacity)
        ]
        return Network.from_edges(triples, vertices=order)


@dataclass(frozen=True)
class Cut:
    """A vertex subset of a network. The empty set and the full set are allowed."""

    net: Network = field(compare=False, repr=False)
    members: int
    capacity: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if self.members & ~self.net.full or self.members < 0:
            raise BindingError("membership vector has bits outside the vertex range")
        object.__setattr__(self, "capacity", self.net.capacity_mask(self.members))

    @classmethod
    def of(cls, net: Network, members: Iterable[Vertex]) -> "Cut":
        return cls(net, net.mask_of(members))

    @property
    def complement(self) -> "Cut":
        return Cut(self.net, self.net.full ^ self.members)

    @property
    def proper(self) -> bool:
        return 0 < self.members < self.net.full

    def __contains__(self, v: Vertex) -> bool:
        return bool(self.members >> self.net.vertex(v) & 1)

    def __len__(self) -> int:
        return popcount(self.members)

    def names(self) -> list[str]:
        return self.net.names(self.members)

    def __repr__(self) -> str:
        return f"Cut({{{', '.join(self.names())}}}, c={self.capacity})"


@dataclass(frozen=True, order=True)
class CutPair:
    """The unordered pair {A, A*}, stored by the side without vertex 0."""

    mask: int
    net: Network = field(compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.mask & 1 or not 0 < self.mask < self.net.full:
            raise PreconditionError(
                "a cut pair representative must be proper and exclude vertex 0"
            )

    @classmethod
    def of(cls, cut: Cut) -> "CutPair":
        if not cut.proper:
            raise PreconditionError("the empty set and the full vertex set form no cut pair")
        m = cut.members
        return cls(m ^ cut.net.full if m & 1 else m, cut.net)

    @classmethod
    def from_mask(cls, net: Network, mask: int) -> "CutPair":
        return cls.of(Cut(net, mask))

    @property
    def representative(self) -> Cut:
        return Cut(self.net, self.mask)

    @property
    def capacity(self) -> int:
        return self.net.capacity_mask(self.mask)

    def sides(self) -> tuple[Cut, Cut]:
        rep = self.representative
        return rep, rep.complement

    def side_containing(self, v: Vertex) -> Cut:
        i = self.net.vertex(v)
        m = self.mask if self.mask >> i & 1 else self.net.full ^ self.mask
        return Cut(self.net, m)

    def separates(self, u: Vertex, v: Vertex) -> bool:
        return bool(((self.mask >> self.net.vertex(u)) ^ (self.mask >> self.net.vertex(v))) & 1)

    def names(self) -> list[str]:
        return self.net.names(self.mask)

    def __repr__(self) -> str:
        return f"CutPair({{{', '.join(self.names())}}})"


def _check(net: Network, *cuts: Cut) -> None:
    for c in cuts:
        if c.net is not net:
            raise BindingError("cut is bound to a different network")


def coboundary(net: Network, cut: Cut) -> list[int]:
    """Indices of the edges with exactly one endpoint in ``cut``, ascending."""
    _check(net, cut)
    return net.coboundary_mask(cut.members)


def capacity(net: Network, cut: Cut) -> int:
    _check(net, cut)
    return net.capacity_mask(cut.members)


def corners(a: Cut, b: Cut) -> tuple[Cut, Cut, Cut, Cut]:
    """``(A∩B, A∩B*, A*∩B, A*∩B*)``.

    Positions 0/3 and 1/2 are the opposite corners; any other two are adjacent.
    """
    _check(a.net, b)
    full = a.net.full
    x, y = a.members, b.members
    return (
        Cut(a.net, x & y),
        Cut(a.net, x & ~y & full),
        Cut(a.net, ~x & y & full),
        Cut(a.net, ~x & ~y & full),
    )


def crosses_mask(x: int, y: int, full: int) -> bool:
    """True iff all four corners of the two vertex sets are nonempty."""
    return bool(x & y and x & ~y & full and ~x & y & full and ~(x | y) & full)


def is_nested(a: Cut, b: Cut) -> bool:
    _check(a.net, b)
    return not crosses_mask(a.members, b.members, a.net.full)


def is_tight(net: Network, cut: Cut) -> bool:
    """Both sides of a proper cut induce connected subgraphs."""
    _check(net, cut)
    if not cut.proper:
        raise PreconditionError("tightness is defined for proper cuts only")
    return net._connected(cut.members) and net._connected(net.full ^ cut.members)
