"""Rand index and adjusted Rand index.

Both indices are computed from exact integer pair counts; floating point
enters only in the final division.  The adjusted index has two algebraic
faces, one over the contingency table and one over the pair counts a, b,
c, d, and both are exposed so the test suite can confront them.
"""

from math import comb

from .errors import UndefinedIndexError
from .partitions import ContingencyTable, Partition, PairCounts, contingency, pair_counts


def rand_index(t: ContingencyTable) -> float:
    """Plain Rand index: fraction of element pairs treated alike by both partitions."""
    pc = pair_counts(t)
    total = pc.total_pairs
    if total == 0:
        # single element: the lone empty pair set agrees trivially
        return 1.0
    return (pc.a + pc.d) / total


def adjusted_rand_index(t: ContingencyTable) -> float:
    """Adjusted Rand index via the contingency-table sums.

    With A the sum of C(cell, 2), R and C the same sums over the row and
    column margins and T = C(n, 2), the index is
    (2*T*A - 2*R*C) / (T*(R + C) - 2*R*C).  All four sums are exact
    integers, so agreement of identical partitions comes out exactly 1.0.
    """
    from . import _kernels as kernels

    a_sum = kernels.sum_comb2(t.counts)
    r_sum = kernels.sum_comb2(t.row_margins)
    c_sum = kernels.sum_comb2(t.col_margins)
    return _adjusted_from_sums(a_sum, r_sum, c_sum, t.total)


def _adjusted_from_sums(a_sum: int, r_sum: int, c_sum: int, n: int) -> float:
    t_sum = comb(n, 2)
    num = 2 * t_sum * a_sum - 2 * r_sum * c_sum
    den = t_sum * (r_sum + c_sum) - 2 * r_sum * c_sum
    if den == 0:
        # both partitions place everything in one cluster, or n < 2
        if num == 0:
            return 1.0
        raise UndefinedIndexError("adjusted Rand index undefined: zero denominator")
    return num / den


def adjusted_rand_index_pairs(pc: PairCounts) -> float:
    """Adjusted Rand index from the pair counts a, b, c, d directly.

    2*(a*d - b*c) / (b*b + c*c + 2*a*d + (a + d)*(b + c)); equivalent to
    the contingency form, kept as the independent cross-check route.
    """
    a, b, c, d = pc.a, pc.b, pc.c, pc.d
    num = 2 * (a * d - b * c)
    den = b * b + c * c + 2 * a * d + (a + d) * (b + c)
    if den == 0:
        if num == 0:
            return 1.0
        raise UndefinedIndexError("adjusted Rand index undefined: zero denominator")
    return num / den


def ari(p: Partition, q: Partition) -> float:
    """Adjusted Rand index between two partitions of the same set."""
    return adjusted_rand_index(contingency(p, q))


def ri(p: Partition, q: Partition) -> float:
    """Rand index between two partitions of the same set."""
    return rand_index(contingency(p, q))
