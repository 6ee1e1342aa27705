"""Bundled example networks.

``fig1`` and ``fig2`` are the worked examples for the max-flow min-cut
picture and the network-with-structure-tree picture; the rest are small
standard graphs and seeded random instances written by
``scripts/make_corpus.py``.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from ..io import load_network
from ..network import Network


def corpus_dir() -> Path:
    return Path(str(resources.files(__package__)))


def corpus_files() -> list[Path]:
    return sorted(p for p in corpus_dir().iterdir() if p.suffix in (".json", ".txt"))


def corpus_names() -> list[str]:
    return [p.stem for p in corpus_files()]


def load(name: str) -> Network:
    for p in corpus_files():
        if p.stem == name:
            return load_network(p)
    raise KeyError(f"no corpus network named {name!r}")
