"""Sweep atom posets for the lattice and Mobius conditions, one CSV row per involution."""

import argparse
import csv
import sys
import time
from dataclasses import dataclass

from affinv.atoms import atom_poset, is_lattice, mobius_values
from affinv.involutions import enumerate_involutions, hat_length


@dataclass
class SweepConfig:
    budget: int = 30          # hat_length(z) * n bound
    n_max: int = 30
    max_nodes: int = 10_000


def sweep(cfg: SweepConfig, out):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "hat", "window", "atoms", "lattice", "mobius"])
    failures = 0
    for n in range(2, min(cfg.n_max, cfg.budget) + 1):
        for z in enumerate_involutions(n, cfg.budget // n):
            if hat_length(z) == 0:
                continue
            poset = atom_poset(z)
            lattice = is_lattice(poset)
            mu = sorted(mobius_values(poset, max_nodes=cfg.max_nodes))
            failures += not lattice or not set(mu) <= {-1, 0, 1}
            writer.writerow([n, hat_length(z), list(z.window), len(poset.nodes), lattice,
                             " ".join(map(str, mu))])
    return failures


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=int, default=SweepConfig.budget)
    ap.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    args = ap.parse_args()
    start = time.perf_counter()
    failures = sweep(SweepConfig(args.budget, args.n_max), sys.stdout)
    print(f"{failures} failures in {time.perf_counter() - start:.1f}s", file=sys.stderr)
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
