"""Write the generated part of the bundled corpus (standard graphs and seeded random networks)."""

import json
import random
from pathlib import Path

from structree.generators import complete, cycle, petersen, random_network
from structree.io import network_to_json

OUT = Path(__file__).resolve().parents[1] / "src" / "structree" / "corpus"


def write(name, net):
    (OUT / f"{name}.json").write_text(json.dumps(network_to_json(net), indent=1) + "\n")


def main():
    write("c4", cycle(4))
    write("c6", cycle(6))
    write("k4", complete(4))
    write("k5", complete(5))
    write("petersen", petersen())
    rng = random.Random(20240611)
    for k, n in enumerate([5, 6, 7, 7, 8, 9]):
        write(f"random{k}", random_network(rng, n))


if __name__ == "__main__":
    main()
