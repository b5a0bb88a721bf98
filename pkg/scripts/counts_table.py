"""Print the coefficient table of the involution series and cross-check it by enumeration."""

import argparse
import sys
from dataclasses import dataclass

from affinv.affine_core import length
from affinv.genfunc import coefficient_csv, coefficient_table, count_N
from affinv.involutions import enumerate_involutions


@dataclass
class CountsConfig:
    n: int = 4
    max_m: int = 10
    check: bool = False


def enumerated_counts(n: int, max_m: int) -> list[int]:
    counts = [0] * (max_m + 1)
    for z in enumerate_involutions(n, max_m):
        if length(z) <= max_m:
            counts[length(z)] += 1
    return counts


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=CountsConfig.n)
    ap.add_argument("--max-m", type=int, default=CountsConfig.max_m)
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    cfg = CountsConfig(args.n, args.max_m, args.check)
    sys.stdout.write(coefficient_csv(coefficient_table(cfg.n, cfg.max_m)))
    if cfg.check:
        found = enumerated_counts(cfg.n, cfg.max_m)
        bad = [m for m in range(1, cfg.max_m + 1) if found[m] != count_N(cfg.n, m)]
        print(f"enumeration check: {'ok' if not bad else f'mismatch at m={bad}'}", file=sys.stderr)
        raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
