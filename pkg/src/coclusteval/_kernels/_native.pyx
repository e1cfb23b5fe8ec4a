# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring coclusteval._kernels.pure.

Pair-count accumulators run in unsigned 128-bit arithmetic so the sums stay
exact far past int64 (block tables over a 10^6 x 10^6 grid still fit with
orders of magnitude to spare).  Results are returned as Python ints.
"""

import numpy as np

from . import pure as _pure

NAME = "native"

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"


cdef inline object _u128_to_int(u128 x):
    cdef unsigned long long hi = <unsigned long long> (x >> 64)
    cdef unsigned long long lo = <unsigned long long> x
    if hi == 0:
        return int(lo)
    return (int(hi) << 64) | int(lo)


def contingency_counts(p, q, Py_ssize_t nrow, Py_ssize_t ncol):
    """Cross-tabulate two 1-based label vectors into an (nrow, ncol) int64 matrix."""
    cdef const long long[::1] pv = np.ascontiguousarray(p, dtype=np.int64)
    cdef const long long[::1] qv = np.ascontiguousarray(q, dtype=np.int64)
    if pv.shape[0] != qv.shape[0]:
        raise ValueError("label vectors differ in length")
    out = np.zeros((nrow, ncol), dtype=np.int64)
    cdef long long[:, ::1] c = out
    cdef Py_ssize_t i
    for i in range(pv.shape[0]):
        c[pv[i] - 1, qv[i] - 1] += 1
    return out


def sum_comb2(values):
    """Exact sum of C(v, 2) over an array of non-negative counts."""
    arr = np.ascontiguousarray(np.asarray(values, dtype=np.int64).ravel())
    cdef const long long[::1] v = arr
    cdef u128 acc = 0
    cdef u128 x
    cdef Py_ssize_t i
    for i in range(v.shape[0]):
        if v[i] >= 2:
            x = <u128> v[i]
            acc += x * (x - 1) // 2
    return _u128_to_int(acc)


def sum_comb2_outer(xs, ys):
    """Exact sum of C(x*y, 2) over the outer product of two count vectors.

    Streams over every product without materializing the outer matrix.  The
    128-bit accumulator is exact while (sum xs)*(sum ys) < 2^63; inputs past
    that bound are delegated to the big-int pure implementation.
    """
    xa = np.ascontiguousarray(np.asarray(xs, dtype=np.int64).ravel())
    ya = np.ascontiguousarray(np.asarray(ys, dtype=np.int64).ravel())
    cdef const long long[::1] x = xa
    cdef const long long[::1] y = ya
    cdef u128 sx = 0, sy = 0
    cdef Py_ssize_t i, j
    for i in range(x.shape[0]):
        sx += <u128> x[i]
    for j in range(y.shape[0]):
        sy += <u128> y[j]
    # Each product is at most sx*sy; C(sx*sy, 2) must fit in the accumulator.
    # Check the factors first so the guard product itself cannot wrap.
    if sx > 0 and sy > 0:
        if (
            sx >= <u128> 9223372036854775808ULL
            or sy >= <u128> 9223372036854775808ULL
            or sx * sy >= <u128> 9223372036854775808ULL
        ):
            return _pure.sum_comb2_outer(xa, ya)
    cdef u128 acc = 0
    cdef u128 prod
    for i in range(x.shape[0]):
        if x[i] == 0:
            continue
        for j in range(y.shape[0]):
            if y[j] == 0:
                continue
            prod = (<u128> x[i]) * (<u128> y[j])
            if prod >= 2:
                acc += prod * (prod - 1) // 2
    return _u128_to_int(acc)


def best_diagonal_exhaustive(square):
    """Max over permutations s of sum_i m[i, s(i)] for a square count matrix.

    Heap's algorithm enumerates the permutations in place; each diagonal sum
    is recomputed in full, matching the cost profile of a naive scan.
    """
    arr = np.ascontiguousarray(np.asarray(square, dtype=np.int64))
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("matrix must be square")
    cdef const long long[:, ::1] m = arr
    cdef Py_ssize_t n = m.shape[0]
    if n == 0:
        return 0
    if n > 20:
        raise ValueError("exhaustive scan limited to 20 clusters")
    cdef Py_ssize_t perm[20]
    cdef Py_ssize_t ctr[20]
    cdef Py_ssize_t i, k, tmp
    cdef long long s, best
    for i in range(n):
        perm[i] = i
        ctr[i] = 0
    best = 0
    for k in range(n):
        best += m[k, perm[k]]
    i = 0
    while i < n:
        if ctr[i] < i:
            if i % 2 == 0:
                tmp = perm[0]; perm[0] = perm[i]; perm[i] = tmp
            else:
                tmp = perm[ctr[i]]; perm[ctr[i]] = perm[i]; perm[i] = tmp
            s = 0
            for k in range(n):
                s += m[k, perm[k]]
            if s > best:
                best = s
            ctr[i] += 1
            i = 0
        else:
            ctr[i] = 0
            i += 1
    return int(best)
