"""Small named graph families and a seeded random network generator."""

from __future__ import annotations

import random

from .network import Network


def path(caps: list[int], names: str = "abcdefghijklmnopqrstuvwxyz") -> Network:
    return Network.from_edges(
        [(names[i], names[i + 1], c) for i, c in enumerate(caps)],
        vertices=list(names[: len(caps) + 1]),
    )


def cycle(n: int, c: int = 1) -> Network:
    names = [str(i + 1) for i in range(n)]
    return Network.from_edges(
        [(names[i], names[(i + 1) % n], c) for i in range(n)], vertices=names
    )


def complete(n: int, c: int = 1) -> Network:
    names = [str(i + 1) for i in range(n)]
    return Network.from_edges(
        [(names[i], names[j], c) for i in range(n) for j in range(i + 1, n)],
        vertices=names,
    )


def petersen(c: int = 1) -> Network:
    outer = [(f"o{i}", f"o{(i + 1) % 5}", c) for i in range(5)]
    spokes = [(f"o{i}", f"i{i}", c) for i in range(5)]
    inner = [(f"i{i}", f"i{(i + 2) % 5}", c) for i in range(5)]
    names = [f"o{i}" for i in range(5)] + [f"i{i}" for i in range(5)]
    return Network.from_edges(outer + spokes + inner, vertices=names)


def random_network(
    rng: random.Random,
    n: int,
    density: float = 0.35,
    cmax: int = 9,
) -> Network:
    """Connected network: a random spanning tree plus each other edge with prob. ``density``."""
    names = [f"v{i}" for i in range(n)]
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for k in range(1, n):
        u, v = order[k], order[rng.randrange(k)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < density:
                edges.add((u, v))
    triples = [(names[u], names[v], rng.randint(1, cmax)) for u, v in sorted(edges)]
    return Network.from_edges(triples, vertices=names)
