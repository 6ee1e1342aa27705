"""Inductive construction of the canonical nested set of thin cuts.

Level by level over capacities ``n = 1 .. max λ``:

* ``C_n``  thin cut pairs of capacity ``n``;
* ``D_n``  those crossing nothing accepted at lower levels;
* ``D'_n`` those members of ``D_n`` that, for at least one pair ``{u, v}``
  they are thin for, attain the smallest crossing count against ``D_n``
  among all members of ``D_n`` thin for ``{u, v}``.

Ties are all admitted, so no choice is ever made and the result depends
only on the network.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .atlas import LambdaTable, ThinCutRecord, lambda_table, mu_mask, thin_cuts
from .errors import PreconditionError, VertexLookupError
from .network import CutPair, Network


@dataclass(frozen=True)
class Level:
    n: int
    candidates: tuple[ThinCutRecord, ...]  # C_n
    nested: tuple[ThinCutRecord, ...]  # D_n
    accepted: tuple[ThinCutRecord, ...]  # D'_n
    mu_lower: dict[int, int]  # mask -> crossings with E_{n-1}, for all of C_n
    mu_level: dict[int, int]  # mask -> crossings with the reference family, for D_n
    best: dict[tuple[int, int], int]  # witness pair -> minimal crossing count
    optimal_for: dict[int, tuple[tuple[int, int], ...]]  # accepted mask -> witnesses


@dataclass(frozen=True)
class NestedCutSystem:
    net: Network
    lam: LambdaTable
    levels: dict[int, Level]
    pairs: tuple[CutPair, ...] = field(init=False)

    def __post_init__(self) -> None:
        acc = sorted(r.pair for lv in self.levels.values() for r in lv.accepted)
        object.__setattr__(self, "pairs", tuple(acc))

    def upto(self, n: int) -> tuple[CutPair, ...]:
        """``E_n``: accepted pairs of capacity at most ``n``."""
        return tuple(
            sorted(r.pair for k, lv in self.levels.items() if k <= n for r in lv.accepted)
        )

    def level_of(self, pair: CutPair) -> Level:
        for lv in self.levels.values():
            if any(r.pair == pair for r in lv.accepted):
                return lv
        raise VertexLookupError(f"{pair!r} is not in the nested system")

    def as_sets(self) -> frozenset[frozenset[str]]:
        """All directed members as name sets (both sides of every pair)."""
        out = set()
        for p in self.pairs:
            for side in p.sides():
                out.add(frozenset(side.names()))
        return frozenset(out)


def build_canonical_nested_set(
    net: Network,
    limit: int | None = None,
    *,
    reference: Literal["nested", "thin"] = "nested",
) -> NestedCutSystem:
    """Build the canonical nested set.

    ``reference="thin"`` measures crossings against all of ``C_n`` instead of
    ``D_n``; it is a non-default variant kept for comparison.
    """
    if reference not in ("nested", "thin"):
        raise PreconditionError(f"unknown reference family {reference!r}")
    lam = lambda_table(net) if net.n >= 2 else LambdaTable(net, ((0,),))
    strata = thin_cuts(net, limit, lam)
    full = net.full
    accepted_masks: list[int] = []
    levels: dict[int, Level] = {}
    for n in range(1, lam.max + 1):
        cands = tuple(strata.get(n, ()))
        mu_lower = {r.pair.mask: mu_mask(r.pair.mask, accepted_masks, full) for r in cands}
        nested = tuple(r for r in cands if mu_lower[r.pair.mask] == 0)
        ref = [r.pair.mask for r in (nested if reference == "nested" else cands)]
        mu_level = {r.pair.mask: mu_mask(r.pair.mask, ref, full) for r in nested}
        best: dict[tuple[int, int], int] = {}
        for r in nested:
            m = mu_level[r.pair.mask]
            for w in r.witnesses:
                if w not in best or m < best[w]:
                    best[w] = m
        optimal_for = {}
        accepted = []
        for r in nested:
            m = mu_level[r.pair.mask]
            ws = tuple(w for w in r.witnesses if best[w] == m)
            if ws:
                optimal_for[r.pair.mask] = ws
                accepted.append(r)
        levels[n] = Level(
            n, cands, nested, tuple(accepted), mu_lower, mu_level, best, optimal_for
        )
        accepted_masks.extend(r.pair.mask for r in accepted)
    return NestedCutSystem(net, lam, levels)


@dataclass(frozen=True)
class OptimalityReport:
    pair: CutPair
    level: int
    witness: tuple[int, int]
    mu: int
    losers: tuple[tuple[CutPair, int], ...]  # strictly larger crossing count
    ties: tuple[tuple[CutPair, int], ...]  # equal count, also admitted


def optimality_certificate(
    system: NestedCutSystem, pair: CutPair, witness=None
) -> OptimalityReport:
    """Why ``pair`` was admitted: a witness pair and the candidates it beat.

    ``witness`` may name a specific vertex pair; by default the first pair
    for which ``pair`` is optimal is used.
    """
    lv = system.level_of(pair)
    opts = lv.optimal_for[pair.mask]
    net = system.net
    if witness is None:
        w = opts[0]
    else:
        a, b = sorted(net.vertex(x) for x in witness)
        w = (a, b)
        if w not in opts:
            raise VertexLookupError(f"{pair!r} is not optimal for {net.names((1 << a) | (1 << b))}")
    m = lv.mu_level[pair.mask]
    losers, ties = [], []
    for r in lv.nested:
        if r.pair == pair or w not in r.witnesses:
            continue
        other = lv.mu_level[r.pair.mask]
        (losers if other > m else ties).append((r.pair, other))
    return OptimalityReport(pair, lv.n, w, m, tuple(losers), tuple(ties))


def provenance(system: NestedCutSystem) -> dict:
    """JSON-ready record of every level: accepted and rejected pairs with reasons."""
    net = system.net

    def wnames(ws):
        return [[net.vertices[u], net.vertices[v]] for u, v in ws]

    levels = []
    for n, lv in system.levels.items():
        if not lv.candidates:
            continue
        rows = []
        for r in lv.candidates:
            m = r.pair.mask
            row = {
                "cut": r.pair.names(),
                "witnesses": wnames(r.witnesses),
                "mu_lower": lv.mu_lower[m],
            }
            if m in lv.mu_level:
                row["mu"] = lv.mu_level[m]
            if m in lv.optimal_for:
                row["status"] = "accepted"
                row["optimal_for"] = wnames(lv.optimal_for[m])
            elif m in lv.mu_level:
                row["status"] = "not optimal"
            else:
                row["status"] = "crosses lower level"
            rows.append(row)
        levels.append({"capacity": n, "cuts": rows})
    return {"vertices": list(net.vertices), "levels": levels}
