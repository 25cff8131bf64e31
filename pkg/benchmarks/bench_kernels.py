"""Compare the compiled and pure-Python kernel backends.

Runs ideal closure, residuals and the exhaustive subset enumeration on a
few representative rings with each backend and prints a timing table.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import importlib
import time

import numpy as np

from blrings.construct import matrix_ring, zmod


def _load_backends():
    backends = {}
    pure = importlib.import_module("blrings._kernels_py")
    backends[pure.BACKEND] = pure
    try:
        compiled = importlib.import_module("blrings._kernels_c")
    except ImportError:
        print("compiled backend not available; timing pure Python only")
    else:
        backends[compiled.BACKEND] = compiled
    return backends


def _cases():
    z12 = zmod(12)
    z24 = zmod(24)
    m2z4 = matrix_ring(zmod(4), 2)
    members_6z12 = np.zeros(12, dtype=bool)
    members_6z12[[0, 6]] = True

    def closure_m2z4(k):
        for seed in range(0, m2z4.order, 17):
            members = np.zeros(m2z4.order, dtype=bool)
            members[seed] = True
            k.ideal_closure(m2z4.add, m2z4.mul, members)

    def residuals_z24(k):
        j = np.zeros(24, dtype=bool)
        j[::6] = True
        elems = np.arange(0, 24, 2, dtype=np.int64)
        for _ in range(200):
            k.residual_right(z24.mul, elems, j)
            k.residual_left(z24.mul, elems, j)

    def subsets_z12(k):
        k.enumerate_ideals_exhaustive(z12.add, z12.mul, 0)

    def subsets_z16(k):
        r = zmod(16)
        k.enumerate_ideals_exhaustive(r.add, r.mul, 0)

    return [
        ("ideal closures in M2(Z4), 16 seeds", closure_m2z4),
        ("400 residuals in Z24", residuals_z24),
        ("exhaustive subsets of Z12 (2^12)", subsets_z12),
        ("exhaustive subsets of Z16 (2^16)", subsets_z16),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3,
                    help="repetitions per case; the best time is reported")
    args = ap.parse_args()

    backends = _load_backends()
    cases = _cases()
    width = max(len(name) for name, _ in cases)
    names = list(backends)
    header = f"{'case':<{width}}  " + "  ".join(f"{n:>10}" for n in names)
    print(header)
    print("-" * len(header))
    results = {}
    for case_name, fn in cases:
        row = []
        for bname in names:
            k = backends[bname]
            best = min(
                _timed(fn, k) for _ in range(args.repeat)
            )
            results[(case_name, bname)] = best
            row.append(f"{best * 1e3:>8.1f}ms")
        print(f"{case_name:<{width}}  " + "  ".join(f"{c:>10}" for c in row))
    if len(names) == 2:
        a, b = names
        print()
        for case_name, _ in cases:
            ratio = results[(case_name, b)] / results[(case_name, a)]
            print(f"{case_name}: {a} is {ratio:.1f}x the speed of {b}"
                  if ratio >= 1 else
                  f"{case_name}: {b} is {1 / ratio:.1f}x the speed of {a}")


def _timed(fn, k) -> float:
    start = time.perf_counter()
    fn(k)
    return time.perf_counter() - start


if __name__ == "__main__":
    main()
