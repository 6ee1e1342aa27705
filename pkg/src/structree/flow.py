"""Augmenting-path maximum flow and the source-side minimum cut it certifies."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BindingError, PreconditionError
from .network import Cut, Network, Vertex


@dataclass(frozen=True)
class Flow:
    """An (s, t)-flow.

    ``tail[k]`` is the endpoint the flow on edge ``k`` leaves from, or ``None``
    while the edge carries nothing. ``amount[k]`` is the non-negative flow value.
    """

    net: Network
    source: int
    sink: int
    tail: tuple[int | None, ...]
    amount: tuple[int, ...]
    value: int

    def out_in(self, v: int) -> tuple[int, int]:
        """``(f+(v), f-(v))``."""
        out = inn = 0
        for w, k in self.net.adjacency[v]:
            if self.tail[k] == v:
                out += self.amount[k]
            elif self.tail[k] == w:
                inn += self.amount[k]
        return out, inn


def _residual_bfs(net: Network, signed: list[int], s: int, reverse: bool):
    """BFS over edges with residual capacity. Returns the parent map."""
    parent: dict[int, tuple[int, int]] = {s: (-1, -1)}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        nbrs = net.adjacency[x]
        for y, k in reversed(nbrs) if reverse else nbrs:
            if y in parent:
                continue
            u, _ = net.edges[k]
            # signed flow is positive along the stored (low, high) direction
            room = net.capacity[k] - signed[k] if x == u else net.capacity[k] + signed[k]
            if room > 0:
                parent[y] = (x, k)
                queue.append(y)
    return parent


def max_flow(net: Network, s: Vertex, t: Vertex, *, reverse: bool = False) -> Flow:
    """Shortest augmenting paths, pushing the bottleneck amount each round.

    Neighbours are scanned in ascending index order; ``reverse=True`` scans
    them descending, which yields a different (equally maximal) flow.
    """
    si, ti = net.vertex(s), net.vertex(t)
    if si == ti:
        raise PreconditionError("source and sink must differ")
    signed = [0] * len(net.edges)
    value = 0
    while True:
        parent = _residual_bfs(net, signed, si, reverse)
        if ti not in parent:
            break
        path = []
        y = ti
        while y != si:
            x, k = parent[y]
            path.append((x, k))
            y = x
        push = min(
            net.capacity[k] - signed[k] if x == net.edges[k][0] else net.capacity[k] + signed[k]
            for x, k in path
        )
        for x, k in path:
            signed[k] += push if x == net.edges[k][0] else -push
        value += push
    tail = tuple(
        None if g == 0 else (u if g > 0 else v)
        for g, (u, v) in zip(signed, net.edges)
    )
    return Flow(net, si, ti, tail, tuple(abs(g) for g in signed), value)


def _signed(f: Flow) -> list[int]:
    return [
        0 if tl is None else (a if tl == u else -a)
        for tl, a, (u, _) in zip(f.tail, f.amount, f.net.edges)
    ]


def min_cut_from_flow(net: Network, f: Flow) -> Cut:
    """Vertices reachable from the source by augmenting paths.

    For a maximal flow this is the smallest minimum cut containing the source.
    """
    if f.net is not net:
        raise BindingError("flow belongs to a different network")
    parent = _residual_bfs(net, _signed(f), f.source, False)
    if f.sink in parent:
        raise PreconditionError("flow is not maximal: an augmenting path reaches the sink")
    return Cut(net, sum(1 << v for v in parent))


def flow_across(net: Network, f: Flow, cut: Cut) -> int:
    """``f+(A) - f-(A)``: net flow leaving the vertex set."""
    if f.net is not net or cut.net is not net:
        raise BindingError("flow and cut must belong to the network")
    a = cut.members
    total = 0
    for k in net.coboundary_mask(a):
        tl = f.tail[k]
        if tl is None:
            continue
        total += f.amount[k] if a >> tl & 1 else -f.amount[k]
    return total


def check_flow(net: Network, f: Flow) -> None:
    """Raise ``PreconditionError`` unless capacity, conservation and value hold."""
    for k, (a, c) in enumerate(zip(f.amount, net.capacity)):
        if not 0 <= a <= c:
            raise PreconditionError(f"edge {k} carries {a} outside [0, {c}]")
    for v in range(net.n):
        if v in (f.source, f.sink):
            continue
        out, inn = f.out_in(v)
        if out != inn:
            raise PreconditionError(f"conservation fails at {net.vertices[v]!r}")
    out, inn = f.out_in(f.source)
    if out - inn != f.value or f.value < 0:
        raise PreconditionError("flow value does not match the source balance")
