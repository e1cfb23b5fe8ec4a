"""Classification error between co-partitions.

The per-axis distance is the misclassification rate minimized over all
relabelings of one side's clusters; the two axes combine as
d_r + d_c - d_r*d_c.  Two interchangeable maximizers find the best
relabeling: an exhaustive permutation scan, capped because the search
space is H!, and a linear assignment solver with no cap.  The direct
double-minimization form is kept alongside as an oracle.
"""

from dataclasses import dataclass
from itertools import permutations

import numpy as np
from scipy.optimize import linear_sum_assignment

from . import _kernels as kernels
from .errors import CapacityError, ConfigError, DimensionMismatchError
from .partitions import CoPartition, Partition, contingency

DEFAULT_EXHAUSTIVE_CAP = 9

# the permutation kernels hold their state in fixed stack arrays
_KERNEL_LIMIT = 20


@dataclass(frozen=True)
class CeSolver:
    """How the best cluster relabeling is searched.

    mode "exhaustive" tries every permutation and refuses cluster counts
    above ``cap``; mode "assignment" solves the equivalent linear
    assignment problem and has no cap.
    """

    mode: str = "assignment"
    cap: int = DEFAULT_EXHAUSTIVE_CAP

    def __post_init__(self):
        if self.mode not in ("exhaustive", "assignment"):
            raise ConfigError(f"unknown solver mode {self.mode!r}")
        if self.cap < 1:
            raise ConfigError("cap must be >= 1")


def _padded_square(counts):
    """Embed a rectangular count table in a square one with empty clusters."""
    h = max(counts.shape)
    if counts.shape == (h, h):
        return counts
    square = np.zeros((h, h), dtype=np.int64)
    square[: counts.shape[0], : counts.shape[1]] = counts
    return square


def _best_agreement(counts, solver: CeSolver) -> int:
    """Largest diagonal sum of the padded table over cluster matchings."""
    square = _padded_square(counts)
    h = square.shape[0]
    if solver.mode == "exhaustive":
        if h > min(solver.cap, _KERNEL_LIMIT):
            raise CapacityError(
                f"exhaustive search over {h} clusters exceeds the cap of "
                f"{solver.cap} permutable clusters; use the assignment solver"
            )
        return kernels.best_diagonal_exhaustive(square)
    rows, cols = linear_sum_assignment(square, maximize=True)
    return int(square[rows, cols].sum())


def row_distance(p: Partition, q: Partition, solver: CeSolver = CeSolver()) -> float:
    """Misclassification rate between two partitions of one axis.

    1 - (best matched agreement)/n, minimized over relabelings of ``q``.
    Despite the name this applies unchanged to column partitions; the
    smaller cluster set is padded with empty clusters before matching.
    """
    t = contingency(p, q)
    return 1.0 - _best_agreement(t.counts, solver) / t.total


def classification_error(u: CoPartition, v: CoPartition, solver: CeSolver = CeSolver()) -> float:
    """Combined misclassification rate of two co-partitions.

    Equals d_r + d_c - d_r*d_c for the per-axis distances, evaluated here
    in the equivalent product form 1 - (best_r*best_c)/(I*J) so the float
    result coincides bit for bit with the direct double minimization.
    """
    if u.grid_shape != v.grid_shape:
        raise DimensionMismatchError(f"dimension mismatch: grids {u.grid_shape} and {v.grid_shape} differ")
    tz = contingency(u.rows, v.rows)
    tw = contingency(u.cols, v.cols)
    best_r = _best_agreement(tz.counts, solver)
    best_c = _best_agreement(tw.counts, solver)
    return 1.0 - (best_r * best_c) / (tz.total * tw.total)


def classification_error_direct(u: CoPartition, v: CoPartition, cap: int = DEFAULT_EXHAUSTIVE_CAP) -> float:
    """Classification error by brute double minimization over relabelings.

    Walks every (row permutation, column permutation) pair and takes the
    smallest misclassification rate, without assuming the rate splits into
    per-axis parts.  Oracle for classification_error; cost grows as H!*L!.
    """
    if u.grid_shape != v.grid_shape:
        raise DimensionMismatchError(f"dimension mismatch: grids {u.grid_shape} and {v.grid_shape} differ")
    tz = contingency(u.rows, v.rows)
    tw = contingency(u.cols, v.cols)
    rows_sq = _padded_square(tz.counts)
    cols_sq = _padded_square(tw.counts)
    h, l = rows_sq.shape[0], cols_sq.shape[0]
    if h > cap or l > cap:
        raise CapacityError(f"double minimization over {h}!*{l}! permutation pairs exceeds cap {cap}")
    grid_cells = tz.total * tw.total
    row_sums = [sum(rows_sq[i, s[i]] for i in range(h)) for s in permutations(range(h))]
    col_sums = [sum(cols_sq[j, t[j]] for j in range(l)) for t in permutations(range(l))]
    best = None
    for sr in row_sums:
        for sc in col_sums:
            value = 1.0 - (int(sr) * int(sc)) / grid_cells
            if best is None or value < best:
                best = value
    return best
