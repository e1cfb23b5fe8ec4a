"""Pure-Python kernel implementations.

These are the fallback for the compiled extension in ``_native``.  Both
modules expose the same four functions with identical semantics; results
are exact integers in all regimes.  Vectorized numpy paths are used only
where int64 arithmetic provably cannot overflow, otherwise the code drops
to arbitrary-precision Python integers.
"""

from itertools import permutations
from math import comb

import numpy as np

NAME = "pure"

# Largest total m for which m*(m-1) still fits in int64; past it C(m,2) and
# the derived sums need big-int arithmetic.
_INT64_COMB_SAFE = 3_000_000_000


def contingency_counts(p, q, nrow, ncol):
    """Cross-tabulate two 1-based label vectors into an (nrow, ncol) int64 matrix."""
    flat = (np.asarray(p, dtype=np.int64) - 1) * ncol + (np.asarray(q, dtype=np.int64) - 1)
    return np.bincount(flat, minlength=nrow * ncol).reshape(nrow, ncol).astype(np.int64)


def _int64_total(v):
    """Total of a non-negative int64 array, or None if int64 math could overflow."""
    if v.size == 0:
        return 0
    if int(v.max()) <= _INT64_COMB_SAFE and v.size <= 1_000_000_000:
        total = int(v.sum(dtype=np.int64))
        if total <= _INT64_COMB_SAFE:
            return total
    return None


def sum_comb2(values):
    """Exact sum of C(v, 2) over an array of non-negative counts."""
    v = np.asarray(values, dtype=np.int64).ravel()
    if v.size == 0:
        return 0
    # Sum of C(v_i, 2) is bounded by C(sum v_i, 2), so a small enough total
    # keeps every intermediate inside int64.
    if _int64_total(v) is not None:
        return int((v * (v - 1) // 2).sum(dtype=np.int64))
    return sum(comb(int(x), 2) for x in v.tolist() if x >= 2)


def sum_comb2_outer(xs, ys):
    """Exact sum of C(x*y, 2) over the outer product of two count vectors.

    Expanded algebraically: sum C(x*y, 2) = ((sum x^2)(sum y^2) - (sum x)(sum y)) / 2,
    which avoids materializing the outer product.
    """
    x = np.asarray(xs, dtype=np.int64).ravel()
    y = np.asarray(ys, dtype=np.int64).ravel()
    if x.size == 0 or y.size == 0:
        return 0
    sx, sy = _int64_total(x), _int64_total(y)
    if sx is not None and sy is not None and sx * sy <= _INT64_COMB_SAFE:
        sx2 = int((x * x).sum(dtype=np.int64))
        sy2 = int((y * y).sum(dtype=np.int64))
        return (sx2 * sy2 - sx * sy) // 2
    xl = [int(v) for v in x.tolist()]
    yl = [int(v) for v in y.tolist()]
    sx, sy = sum(xl), sum(yl)
    sx2 = sum(v * v for v in xl)
    sy2 = sum(v * v for v in yl)
    return (sx2 * sy2 - sx * sy) // 2


def best_diagonal_exhaustive(square):
    """Max over permutations s of sum_i m[i, s(i)] for a square count matrix.

    Brute force over all n! permutations; the caller is responsible for
    capping n.
    """
    m = np.asarray(square, dtype=np.int64)
    n = m.shape[0]
    if m.ndim != 2 or m.shape[1] != n:
        raise ValueError("matrix must be square")
    if n == 0:
        return 0
    rows = [[int(c) for c in r] for r in m.tolist()]
    rng = range(n)
    return max(sum(rows[i][p[i]] for i in rng) for p in permutations(rng))
