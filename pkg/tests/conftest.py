import random

import pytest
from hypothesis import strategies as st

from structree import corpus
from structree.generators import random_network
from structree.network import Network


@st.composite
def networks(draw, min_n=2, max_n=8, cmax=9):
    """Connected simple networks: a random spanning tree plus extra edges."""
    n = draw(st.integers(min_n, max_n))
    names = [f"x{i}" for i in range(n)]
    edges = {}
    for k in range(1, n):
        parent = draw(st.integers(0, k - 1))
        edges[(parent, k)] = draw(st.integers(1, cmax))
    others = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    for u, v in draw(st.lists(st.sampled_from(others), unique=True)) if others else []:
        edges[(u, v)] = draw(st.integers(1, cmax))
    return Network.from_edges([(names[u], names[v], c) for (u, v), c in edges.items()], vertices=names)


@pytest.fixture(scope="session")
def nets():
    return {name: corpus.load(name) for name in corpus.corpus_names()}


@pytest.fixture
def rng():
    return random.Random(7)


def random_nets(count, seed, lo=4, hi=10):
    rng = random.Random(seed)
    return [random_network(rng, rng.randint(lo, hi)) for _ in range(count)]
