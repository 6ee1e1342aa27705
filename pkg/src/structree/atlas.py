"""Exhaustive cut enumeration: pairwise min-cut values, thin-cut strata, crossing counts.

Every proper cut pair is visited through its representative (the side
without vertex 0), so a network on ``n`` vertices has ``2**(n-1) - 1`` pairs.
Capacities are evaluated in vectorized chunks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from .errors import BindingError, CapacityGuardError, InternalConsistencyError
from .flow import max_flow
from .network import Cut, CutPair, Network, crosses_mask, is_tight

DEFAULT_LIMIT = 20
_CHUNK = 1 << 16


@dataclass(frozen=True)
class LambdaTable:
    """Symmetric table of pairwise minimum cut values."""

    net: Network
    values: tuple[tuple[int, ...], ...]

    def __call__(self, u, v) -> int:
        return self.values[self.net.vertex(u)][self.net.vertex(v)]

    @property
    def max(self) -> int:
        return max((max(row) for row in self.values), default=0)

    def pairs_at(self, n: int) -> list[tuple[int, int]]:
        """Vertex pairs ``(u, v)``, ``u < v``, with value exactly ``n``."""
        return [
            (u, v) for u, v in combinations(range(self.net.n), 2) if self.values[u][v] == n
        ]


@dataclass(frozen=True)
class ThinCutRecord:
    pair: CutPair
    capacity: int
    witnesses: tuple[tuple[int, int], ...]  # index pairs (u, v), u < v, ascending


def lambda_table(net: Network) -> LambdaTable:
    n = net.n
    vals = [[0] * n for _ in range(n)]
    for u, v in combinations(range(n), 2):
        vals[u][v] = vals[v][u] = max_flow(net, u, v).value
    return LambdaTable(net, tuple(tuple(r) for r in vals))


def _guard(net: Network, limit: int | None) -> None:
    limit = DEFAULT_LIMIT if limit is None else limit
    if net.n > limit:
        raise CapacityGuardError(net.n, limit)


def _capacity_chunks(net: Network) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield ``(representative masks, capacities)`` in ascending mask order."""
    total = 1 << (net.n - 1)
    for lo in range(1, total, _CHUNK):
        masks = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64) << 1
        caps = np.zeros(masks.shape, dtype=np.int64)
        for (u, v), c in zip(net.edges, net.capacity):
            caps += c * (((masks >> u) ^ (masks >> v)) & 1)
        yield masks, caps


def enumerate_proper_cuts(
    net: Network, limit: int | None = None
) -> Iterator[tuple[CutPair, int]]:
    """Every proper cut pair once, with its capacity, by ascending representative."""
    _guard(net, limit)
    for masks, caps in _capacity_chunks(net):
        for m, c in zip(masks.tolist(), caps.tolist()):
            yield CutPair(m, net), c


def thin_cuts(
    net: Network, limit: int | None = None, lam: LambdaTable | None = None
) -> dict[int, list[ThinCutRecord]]:
    """Thin cut pairs grouped by capacity, each with all pairs it is thin for."""
    _guard(net, limit)
    if net.n < 2:
        return {}
    lam = lam or lambda_table(net)
    top = lam.max
    by_level = {n: np.array(lam.pairs_at(n), dtype=np.int64).reshape(-1, 2) for n in range(1, top + 1)}
    strata: dict[int, list[ThinCutRecord]] = {}
    for masks, caps in _capacity_chunks(net):
        keep = caps <= top
        for m, c in zip(masks[keep].tolist(), caps[keep].tolist()):
            pairs = by_level.get(c)
            if pairs is None or not len(pairs):
                continue
            sep = ((m >> pairs[:, 0]) ^ (m >> pairs[:, 1])) & 1
            hits = pairs[sep.astype(bool)]
            if not len(hits):
                continue
            witnesses = tuple((int(u), int(v)) for u, v in hits)
            if not is_tight(net, Cut(net, m)):
                raise InternalConsistencyError(f"thin cut {net.names(m)} is not tight")
            strata.setdefault(c, []).append(ThinCutRecord(CutPair(m, net), c, witnesses))
    return dict(sorted(strata.items()))


def _mask(x: Cut | CutPair | int) -> int:
    if isinstance(x, Cut):
        return x.members
    if isinstance(x, CutPair):
        return x.mask
    return x


def mu(cut: Cut | CutPair, family: Iterable[CutPair]) -> int:
    """Number of pairs in ``family`` that cross ``cut``."""
    net = cut.net
    full = net.full
    a = _mask(cut)
    count = 0
    for p in family:
        if p.net is not net:
            raise BindingError("family member bound to a different network")
        if crosses_mask(a, p.mask, full):
            count += 1
    return count


def mu_mask(a: int, family_masks: Iterable[int], full: int) -> int:
    return sum(1 for b in family_masks if crosses_mask(a, b, full))
