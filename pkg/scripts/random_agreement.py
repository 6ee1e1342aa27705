"""Sweep random networks: tree/flow/oracle agreement, contracted trees, hidden vertices.

Example: python3 scripts/random_agreement.py --count 500 --max-n 10 --seed 1
"""

import argparse
import random
import time
from collections import Counter

from structree import verify
from structree.generators import random_network
from structree.nest import build_canonical_nested_set
from structree.oracle import oracle_lambda
from structree.tree import build_tree


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--min-n", type=int, default=4)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--density", type=float, default=0.35)
    ap.add_argument("--cmax", type=int, default=9)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    hidden = Counter()
    failures = 0
    t0 = time.perf_counter()
    for k in range(args.count):
        net = random_network(rng, rng.randint(args.min_n, args.max_n), args.density, args.cmax)
        system = build_canonical_nested_set(net)
        tree = build_tree(system)
        lam = oracle_lambda(net)
        bad = (
            verify.flow_agreement(tree, lam)
            + verify.gomory_hu_agreement(tree, lam)
            + verify.nesting(system)
            + verify.equivariance(net, rng)
        )
        if bad:
            failures += 1
            print(f"network {k}: {bad[0]}")
        hidden[len(tree.signatures) - len(tree.image)] += 1
    print(f"{args.count} networks in {time.perf_counter() - t0:.1f}s, {failures} with violations")
    print("hidden tree vertices per network:", dict(sorted(hidden.items())))


if __name__ == "__main__":
    main()
