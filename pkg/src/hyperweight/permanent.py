"""Exact matrix permanents: naive oracle, Ryser workhorse, dispatcher.

The naive expansion over all permutations is the trusted oracle; Ryser's
inclusion-exclusion (Gray-code subset order, incrementally updated row
sums) is the workhorse. Both are exact. Ryser runs on an int64 kernel only
when a proven bound guarantees no intermediate can overflow; otherwise it
falls back to Python big ints, so results are exact for every input.
"""

from __future__ import annotations

import math
from itertools import permutations
from typing import Sequence

import numpy as np

from ._kernels import resolve_backend, ryser_int64
from .matrices import IntMatrix

NAIVE_LIMIT = 8
RYSER_LIMIT = 30
_DISPATCH_NAIVE_MAX = 6
_INT64_HEADROOM = 1 << 62


def _require_square(matrix: IntMatrix, op: str) -> int:
    if not matrix.is_square:
        raise ValueError(f"{op} requires a square matrix, got {matrix.nrows}x{matrix.ncols}")
    return matrix.nrows


def permanent_naive(matrix: IntMatrix) -> int:
    """Definitional permanent: sum over all permutations. Guarded to 8x8."""
    n = _require_square(matrix, "permanent_naive")
    if n > NAIVE_LIMIT:
        raise ValueError(f"permanent_naive guard: size {n} > {NAIVE_LIMIT}")
    if n == 0:
        return 1
    rows = matrix.entries
    total = 0
    for perm in permutations(range(n)):
        term = 1
        for i in range(n):
            term *= rows[i][perm[i]]
            if term == 0:
                break
        total += term
    return total


def _int64_safe(matrix: IntMatrix) -> bool:
    """True when every intermediate of the Ryser recurrence fits in int64.

    Each subset-S term is a product of row sums restricted to S, bounded by
    prod_i min(row_abs_sum_i, |S| * row_max_i); the accumulated total is
    bounded by the sum of those bounds over all subset sizes. Computed in
    big ints, so the check itself cannot overflow.
    """
    n = matrix.nrows
    abs_sums = [sum(abs(x) for x in row) for row in matrix.entries]
    maxima = [max((abs(x) for x in row), default=0) for row in matrix.entries]
    bound = 0
    for s in range(1, n + 1):
        term = math.comb(n, s)
        for i in range(n):
            term *= min(abs_sums[i], s * maxima[i])
            if term >= _INT64_HEADROOM:
                return False
        bound += term
        if bound >= _INT64_HEADROOM:
            return False
    return True


def _ryser_bigint(rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    row_sums = [0] * n
    total = 0
    parity = 0
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        if ((k ^ (k >> 1)) >> j) & 1:
            parity += 1
            for i in range(n):
                row_sums[i] += rows[i][j]
        else:
            parity -= 1
            for i in range(n):
                row_sums[i] -= rows[i][j]
        term = 1
        for s in row_sums:
            if s == 0:
                term = 0
                break
            term *= s
        if term:
            total = total + term if (n - parity) % 2 == 0 else total - term
    return total


def permanent_ryser(matrix: IntMatrix) -> int:
    """Exact permanent via Ryser's inclusion-exclusion. Guarded to 30x30."""
    n = _require_square(matrix, "permanent_ryser")
    if n > RYSER_LIMIT:
        raise ValueError(f"permanent_ryser guard: size {n} > {RYSER_LIMIT}")
    if n == 0:
        return 1
    backend = resolve_backend()
    if backend != "python" and _int64_safe(matrix):
        return ryser_int64(np.array(matrix.entries, dtype=np.int64), backend)
    return _ryser_bigint(matrix.entries)


def permanent(matrix: IntMatrix) -> int:
    """Dispatching permanent: naive up to 6x6, Ryser beyond.

    The result is independent of the dispatch; both branches are exact.
    """
    n = _require_square(matrix, "permanent")
    if n <= _DISPATCH_NAIVE_MAX:
        return permanent_naive(matrix)
    return permanent_ryser(matrix)
