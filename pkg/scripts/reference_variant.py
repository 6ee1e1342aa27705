"""Compare the default nested family with the variant that ranks crossings against all thin cuts.

Reports how often the two families differ and whether the variant stays nested.
"""

import argparse
import random

from structree import corpus, verify
from structree.generators import random_network
from structree.nest import build_canonical_nested_set


def compare(net, limit=None):
    a = build_canonical_nested_set(net, limit)
    b = build_canonical_nested_set(net, limit, reference="thin")
    return a.as_sets() != b.as_sets(), bool(verify.nesting(b))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    for name in corpus.corpus_names():
        net = corpus.load(name)
        differs, crossing = compare(net, net.n)
        print(f"{name:12s} differs={differs} variant_crosses={crossing}")
    rng = random.Random(args.seed)
    differ = cross = 0
    for _ in range(args.count):
        d, c = compare(random_network(rng, rng.randint(4, 10)))
        differ += d
        cross += c
    print(f"random: {differ}/{args.count} differ, {cross}/{args.count} variant families cross")


if __name__ == "__main__":
    main()
