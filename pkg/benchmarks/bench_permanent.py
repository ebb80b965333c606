"""Benchmark the Ryser permanent backends against each other.

Runs the same matrices through the numba kernel, the pure-numpy twin, and
the big-int reference path, checks the results agree bit for bit, and
prints per-size timings. The numba timing excludes the one-off JIT compile
(reported separately).

Usage: python benchmarks/bench_permanent.py
"""

import os
import random
import time

import numpy as np

os.environ.setdefault("HYPERWEIGHT_BACKEND", "numba")

from hyperweight.matrices import IntMatrix
from hyperweight.permanent import _ryser_bigint
from hyperweight._kernels import _get_numba_kernel, ryser_int64_numpy

SIZES = (8, 10, 12, 13, 14)
REPEATS = 5
SEED = 20240901


def random_matrix(rng, n):
    return [[rng.choice((-1, 0, 1)) for _ in range(n)] for _ in range(n)]


def best_of(fn, arg, repeats=REPEATS):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(arg)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rng = random.Random(SEED)
    kernel = _get_numba_kernel()
    if kernel is None:
        print("numba not importable; benchmarking numpy vs big-int only")

    if kernel is not None:
        t0 = time.perf_counter()
        kernel(np.zeros((2, 2), dtype=np.int64))
        print(f"numba JIT compile: {time.perf_counter() - t0:.2f} s (one-off)\n")

    header = f"{'n':>3} {'numba':>12} {'numpy':>12} {'python':>12} {'permanent':>14}"
    print(header)
    print("-" * len(header))
    for n in SIZES:
        m = random_matrix(rng, n)
        a = np.array(m, dtype=np.int64)
        matrix = IntMatrix.from_rows(m)
        reference = _ryser_bigint(matrix.entries)
        if kernel is not None:
            assert int(kernel(a)) == reference
        assert ryser_int64_numpy(a) == reference

        t_numba = best_of(lambda x: int(kernel(x)), a) if kernel is not None else None
        t_numpy = best_of(ryser_int64_numpy, a)
        t_python = best_of(_ryser_bigint, matrix.entries)
        numba_cell = f"{t_numba * 1e3:9.3f} ms" if t_numba is not None else "         --"
        print(
            f"{n:>3} {numba_cell} {t_numpy * 1e3:9.3f} ms "
            f"{t_python * 1e3:9.3f} ms {reference:>14}"
        )
    print("\nall backends agreed exactly on every matrix")


if __name__ == "__main__":
    main()
