#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python twin.

Times the three hot paths (polynomial product, operator product, operator
application) on identical random workloads and prints a small table.

    python3 benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import random
import time
from fractions import Fraction

import weylops._kernels_py as kpy

try:
    import weylops._kernels_cy as kcy
except ImportError:
    kcy = None


def rand_poly(rng, n, p, deg=4, terms=5):
    out = {}
    for _ in range(terms):
        exp = tuple(rng.randint(0, deg) for _ in range(n))
        c = rng.randrange(1, p) if p else Fraction(rng.randint(-6, 6) or 1, rng.randint(1, 5))
        out[exp] = c
    return out


def rand_op(rng, n, p, order=3, terms=3):
    return {
        tuple(rng.randint(0, order) for _ in range(n)): rand_poly(rng, n, p)
        for _ in range(terms)
    }


def time_case(fn, payloads, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for args in payloads:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--samples", type=int, default=200)
    args = ap.parse_args()

    if kcy is None:
        print("compiled kernels unavailable; build the extension first")
        return

    rng = random.Random(424242)
    print(f"{'case':<26}{'pure (s)':>12}{'compiled (s)':>14}{'speedup':>10}")
    for p in (0, 2, 5):
        n = 3
        polys = [(rand_poly(rng, n, p), rand_poly(rng, n, p), p)
                 for _ in range(args.samples)]
        ops = [(rand_op(rng, n, p), rand_op(rng, n, p), p)
               for _ in range(args.samples)]
        applies = [(xi, f, p) for (xi, _, p), (f, _, _p) in zip(ops, polys)]
        for label, fnp, fnc, work in (
            (f"poly_mul char {p}", kpy.poly_mul, kcy.poly_mul, polys),
            (f"diffop_mul char {p}", kpy.diffop_mul, kcy.diffop_mul, ops),
            (f"diffop_apply char {p}", kpy.diffop_apply, kcy.diffop_apply, applies),
        ):
            tp = time_case(fnp, work, args.repeats)
            tc = time_case(fnc, work, args.repeats)
            print(f"{label:<26}{tp:>12.4f}{tc:>14.4f}{tp / tc:>9.2f}x")


if __name__ == "__main__":
    main()
