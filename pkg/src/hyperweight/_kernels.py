"""int64 Ryser kernels: numba-jitted fast path and a pure-numpy twin.

The caller proves an overflow bound before dispatching here, so int64
arithmetic is exact on everything these kernels ever see. Backend choice is
an env flag:

    HYPERWEIGHT_BACKEND=numba   jitted kernel (default; falls back to numpy
                                when numba is not importable)
    HYPERWEIGHT_BACKEND=numpy   vectorized numpy loop
    HYPERWEIGHT_BACKEND=python  skip int64 kernels entirely (big-int path)
"""

from __future__ import annotations

import os

import numpy as np

ENV_BACKEND = "HYPERWEIGHT_BACKEND"
_BACKENDS = ("numba", "numpy", "python")


def _ryser_int64_loops(a):
    # Gray-code subset walk: one column add/remove and one product per step.
    n = a.shape[0]
    row_sums = np.zeros(n, dtype=np.int64)
    total = np.int64(0)
    parity = 0
    for k in range(1, 1 << n):
        j = 0
        while ((k >> j) & 1) == 0:
            j += 1
        if ((k ^ (k >> 1)) >> j) & 1:
            parity += 1
            for i in range(n):
                row_sums[i] += a[i, j]
        else:
            parity -= 1
            for i in range(n):
                row_sums[i] -= a[i, j]
        term = np.int64(1)
        for i in range(n):
            term *= row_sums[i]
        if (n - parity) % 2 == 0:
            total += term
        else:
            total -= term
    return total


_numba_kernel = None
_numba_unavailable = False


def _get_numba_kernel():
    global _numba_kernel, _numba_unavailable
    if _numba_kernel is None and not _numba_unavailable:
        try:
            from numba import njit
        except ImportError:
            _numba_unavailable = True
            return None
        _numba_kernel = njit(cache=True)(_ryser_int64_loops)
    return _numba_kernel


def ryser_int64_numpy(a: np.ndarray) -> int:
    n = a.shape[0]
    row_sums = np.zeros(n, dtype=np.int64)
    total = 0
    parity = 0
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        if ((k ^ (k >> 1)) >> j) & 1:
            parity += 1
            row_sums += a[:, j]
        else:
            parity -= 1
            row_sums -= a[:, j]
        term = int(row_sums.prod())
        total = total + term if (n - parity) % 2 == 0 else total - term
    return total


def resolve_backend() -> str:
    raw = os.environ.get(ENV_BACKEND, "numba").strip().lower()
    if raw not in _BACKENDS:
        raise ValueError(
            f"invalid {ENV_BACKEND}={raw!r}; expected one of {', '.join(_BACKENDS)}"
        )
    if raw == "numba" and _get_numba_kernel() is None:
        return "numpy"
    return raw


def ryser_int64(a: np.ndarray, backend: str) -> int:
    if backend == "numba":
        kernel = _get_numba_kernel()
        if kernel is not None:
            return int(kernel(a))
        backend = "numpy"
    if backend == "numpy":
        return ryser_int64_numpy(a)
    raise ValueError(f"no int64 kernel for backend {backend!r}")
