#!/usr/bin/env python3
"""Exhaustive sweep over 0 < r < n <= max-n and every partition with at most
r parts: run the completion, certify N_r + X with the Jordan oracle, and
optionally audit the engine invariants at every iteration.

    python scripts/reproduce_sweep.py --max-n 30 --jobs 8
    python scripts/reproduce_sweep.py --max-n 20 --check
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from nilcomplete.batch import run_batch


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=30)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--check", action="store_true", help="also check invariants (slower)")
    ap.add_argument("--json", metavar="PATH", help="write a machine-readable summary")
    args = ap.parse_args()

    start = time.perf_counter()
    report = run_batch(args.max_n, jobs=args.jobs, check=args.check)
    elapsed = time.perf_counter() - start
    sys.stdout.write(report.summary())
    print(f"elapsed: {elapsed:.1f} s ({args.jobs} jobs, invariants {'on' if args.check else 'off'})")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump({"max_n": args.max_n, "instances": report.instances,
                       "failures": [list(f) for f in report.failures],
                       "check": args.check, "seconds": round(elapsed, 2)}, fh, indent=2)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
