#!/usr/bin/env python3
"""Time the engine (no oracle) on large uniformly random inputs and report
the graft accounting from the trace.

    python scripts/bench_large.py --n 5000 --r 2499 --samples 10
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from nilcomplete.engine import RunOptions, run
from nilcomplete.partitions import random_partition


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=5000)
    ap.add_argument("--r", type=int, default=2499)
    ap.add_argument("--samples", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    times = []
    print("parts  little  2b  grafts  parts+little  seconds")
    for _ in range(args.samples):
        lam = random_partition(args.n, args.r, rng)
        start = time.perf_counter()
        res = run(args.n, args.r, lam, RunOptions(trace=True))
        dt = time.perf_counter() - start
        times.append(dt)
        doubles = sum(1 for rec in res.trace if rec.case == "2b") // 2
        print(f"{len(lam):5d}  {res.little_iterations:6d}  {doubles:2d}  {res.graft_count:6d}"
              f"  {len(lam) + res.little_iterations:12d}  {dt:7.3f}")
    print(f"median {statistics.median(times):.3f} s, max {max(times):.3f} s")


if __name__ == "__main__":
    main()
