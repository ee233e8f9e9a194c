#!/usr/bin/env python3
"""Run the theorem sweep to a chosen bound and report timing.

    python scripts/run_sweep.py --max-m 60 --jobs 4
"""

import argparse
import time
from collections import Counter

from faulhaber.verify import SweepConfig, parse_only, run_config


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-m", type=int, default=40)
    ap.add_argument("--only", default=None)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    cfg = SweepConfig(max_m=args.max_m, which=parse_only(args.only), jobs=args.jobs)
    t0 = time.perf_counter()
    reports = run_config(cfg)
    dt = time.perf_counter() - t0

    passed = Counter(r.theorem_id for r in reports if r.verdict)
    total = Counter(r.theorem_id for r in reports)
    for tid in sorted(total):
        print(f"{tid:<8} {passed[tid]:>4}/{total[tid]:<4} passed")
    for r in reports:
        if not r.verdict:
            print("FAIL", r.theorem_id, r.m, [c.name for c in r.checks if not c.passed])
    print(f"verified for m <= {cfg.max_m} in {dt:.2f}s")


if __name__ == "__main__":
    main()
