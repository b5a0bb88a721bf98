"""Check the covering property for each rank up to a hat-length bound."""

import argparse
import time
from dataclasses import dataclass

from affinv.bruhat_inv import covering_property_check


@dataclass
class CoveringConfig:
    n_values: tuple[int, ...] = (2, 3, 4)
    max_hat: int = 4
    workers: int | None = None


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=list(CoveringConfig.n_values))
    ap.add_argument("--max-hat", type=int, default=CoveringConfig.max_hat)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()
    cfg = CoveringConfig(tuple(args.n), args.max_hat, args.workers)
    ok = True
    for n in cfg.n_values:
        start = time.perf_counter()
        report = covering_property_check(n, cfg.max_hat, workers=cfg.workers)
        print(f"n={n}: {report.summary()} ({time.perf_counter() - start:.1f}s)")
        ok &= report.ok
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
