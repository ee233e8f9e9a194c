#!/usr/bin/env python3
"""Time the three power-sum routes for one exponent over growing n.

Brute force is skipped once n exceeds --brute-limit.
"""

import argparse
import time

from faulhaber.forms import eval_faulhaber, faulhaber_form, power_sum_bernoulli, power_sum_bruteforce


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--exponent", type=int, default=100)
    ap.add_argument("--brute-limit", type=int, default=10**5)
    args = ap.parse_args()

    form = faulhaber_form(args.exponent)
    print(f"{'n':>10} {'digits':>7} {'faulhaber':>10} {'bernoulli':>10} {'brute':>10}")
    for n in (10**k for k in range(1, 9)):
        f, tf = timed(eval_faulhaber, form, n)
        b, tb = timed(power_sum_bernoulli, args.exponent, n)
        assert f == b
        brute = "-"
        if n <= args.brute_limit:
            s, ts = timed(power_sum_bruteforce, args.exponent, n)
            assert s == f
            brute = f"{ts * 1e3:.2f}ms"
        print(f"{n:>10} {len(str(f.numerator)):>7} {tf * 1e3:>8.2f}ms {tb * 1e3:>8.2f}ms {brute:>10}")


if __name__ == "__main__":
    main()
