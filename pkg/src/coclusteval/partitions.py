"""Partitions, co-partitions, contingency tables and pair counts.

Labels are 1-based contiguous integers.  A partition declares its cluster
count explicitly, which may exceed the largest observed label: empty
clusters are legitimate (the classification-error padding convention
depends on them).  All types are immutable after construction and every
operation here is a pure function.
"""

from dataclasses import dataclass
from math import comb

import numpy as np

from . import _kernels as kernels
from .errors import DimensionMismatchError, LabelRangeError


class Partition:
    """A label vector over n elements, with a declared number of clusters.

    Labels take values in 1..cluster_count; cluster sizes always sum to n.
    """

    __slots__ = ("labels", "cluster_count")

    def __init__(self, labels, cluster_count=None):
        arr = np.asarray(labels)
        if arr.ndim != 1 or arr.size == 0:
            raise LabelRangeError("a partition needs a non-empty 1-D label vector")
        if not np.issubdtype(arr.dtype, np.integer):
            if not np.all(arr == np.floor(arr)):
                raise LabelRangeError("labels must be integers")
        arr = arr.astype(np.int64)
        lo, hi = int(arr.min()), int(arr.max())
        if lo < 1:
            raise LabelRangeError(f"labels must be >= 1, found {lo}")
        if cluster_count is None:
            cluster_count = hi
        cluster_count = int(cluster_count)
        if cluster_count < 1:
            raise LabelRangeError("cluster_count must be >= 1")
        if hi > cluster_count:
            raise LabelRangeError(f"label {hi} exceeds declared cluster_count {cluster_count}")
        arr.setflags(write=False)
        object.__setattr__(self, "labels", arr)
        object.__setattr__(self, "cluster_count", cluster_count)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def n(self):
        """Number of partitioned elements."""
        return int(self.labels.size)

    def __len__(self):
        return self.n

    def sizes(self):
        """Cluster sizes as a length-cluster_count int64 vector (empty clusters are 0)."""
        return np.bincount(self.labels, minlength=self.cluster_count + 1)[1:]

    def relabeled(self, mapping):
        """New partition with cluster ids permuted by ``mapping`` (1-based, length cluster_count)."""
        table = np.asarray(mapping, dtype=np.int64)
        if table.size != self.cluster_count:
            raise LabelRangeError("mapping length must equal cluster_count")
        return Partition(table[self.labels - 1], self.cluster_count)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.cluster_count == other.cluster_count and np.array_equal(self.labels, other.labels)

    def __hash__(self):
        return hash((self.cluster_count, self.labels.tobytes()))

    def __repr__(self):
        body = " ".join(str(x) for x in self.labels[:12])
        if self.n > 12:
            body += " ..."
        return f"Partition([{body}], n={self.n}, clusters={self.cluster_count})"


class CoPartition:
    """A pair of partitions defining a block structure on a grid.

    ``rows`` partitions the I row indices, ``cols`` the J column indices;
    cell (i, j) belongs to the block formed by its row and column clusters.
    """

    __slots__ = ("rows", "cols")

    def __init__(self, rows, cols):
        if not isinstance(rows, Partition) or not isinstance(cols, Partition):
            raise TypeError("rows and cols must be Partition instances")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    def __setattr__(self, name, value):
        raise AttributeError("CoPartition is immutable")

    @property
    def grid_shape(self):
        return (self.rows.n, self.cols.n)

    @property
    def block_count(self):
        return self.rows.cluster_count * self.cols.cluster_count

    def __eq__(self, other):
        if not isinstance(other, CoPartition):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols

    def __hash__(self):
        return hash((self.rows, self.cols))

    def __repr__(self):
        return f"CoPartition(rows={self.rows!r}, cols={self.cols!r})"


class ContingencyTable:
    """Cross-tabulation counts with cached margins and total.

    Margins are always derived from the counts at construction; the cached
    values therefore satisfy the margin identities by definition and the
    invariant checks live in the test suite.
    """

    __slots__ = ("counts", "row_margins", "col_margins", "total")

    def __init__(self, counts):
        arr = np.asarray(counts, dtype=np.int64)
        if arr.ndim != 2 or arr.size == 0:
            raise DimensionMismatchError("counts must be a non-empty 2-D matrix")
        if int(arr.min()) < 0:
            raise LabelRangeError("counts must be non-negative")
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        row = arr.sum(axis=1)
        col = arr.sum(axis=0)
        row.setflags(write=False)
        col.setflags(write=False)
        object.__setattr__(self, "counts", arr)
        object.__setattr__(self, "row_margins", row)
        object.__setattr__(self, "col_margins", col)
        object.__setattr__(self, "total", int(row.sum()))

    def __setattr__(self, name, value):
        raise AttributeError("ContingencyTable is immutable")

    @property
    def shape(self):
        return self.counts.shape

    def transpose(self):
        return ContingencyTable(self.counts.T)

    def __eq__(self, other):
        if not isinstance(other, ContingencyTable):
            return NotImplemented
        return np.array_equal(self.counts, other.counts)

    def __repr__(self):
        return f"ContingencyTable(shape={self.shape}, total={self.total})"


@dataclass(frozen=True)
class PairCounts:
    """The four pair-agreement counts over all unordered element pairs.

    a: together in both partitions; b: together in the first only;
    c: together in the second only; d: apart in both.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            if getattr(self, name) < 0:
                raise ValueError(f"pair count {name} is negative")

    @property
    def total_pairs(self):
        return self.a + self.b + self.c + self.d


def contingency(p: Partition, q: Partition) -> ContingencyTable:
    """Cross-tabulate two partitions of the same set.

    Entry (h, k) counts the elements carrying label h in ``p`` and label k
    in ``q``.  The table has the declared cluster counts as dimensions, so
    empty clusters contribute zero rows or columns.
    """
    if p.n != q.n:
        raise DimensionMismatchError(f"dimension mismatch: partition lengths {p.n} and {q.n} differ")
    counts = kernels.contingency_counts(p.labels, q.labels, p.cluster_count, q.cluster_count)
    return ContingencyTable(counts)


def pair_counts(t: ContingencyTable) -> PairCounts:
    """Derive the pair-agreement counts a, b, c, d from a contingency table."""
    a = kernels.sum_comb2(t.counts)
    b = kernels.sum_comb2(t.row_margins) - a
    c = kernels.sum_comb2(t.col_margins) - a
    d = comb(t.total, 2) - a - b - c
    return PairCounts(a=a, b=b, c=c, d=d)


def block_index(h: int, l: int, col_cluster_count: int) -> int:
    """Flatten a (row cluster, column cluster) pair into a 1-based block id.

    The id enumerates blocks row-cluster-major: (p-1) = (h-1)*L + (l-1)
    where L is the column cluster count.
    """
    if col_cluster_count < 1:
        raise LabelRangeError("col_cluster_count must be >= 1")
    if h < 1:
        raise LabelRangeError(f"row cluster id {h} out of range")
    if not 1 <= l <= col_cluster_count:
        raise LabelRangeError(f"column cluster id {l} out of range 1..{col_cluster_count}")
    return (h - 1) * col_cluster_count + l


def block_unindex(p: int, col_cluster_count: int) -> tuple[int, int]:
    """Invert block_index: recover (row cluster, column cluster) from a block id."""
    if col_cluster_count < 1:
        raise LabelRangeError("col_cluster_count must be >= 1")
    if p < 1:
        raise LabelRangeError(f"block id {p} out of range")
    quot, rem = divmod(p - 1, col_cluster_count)
    return quot + 1, rem + 1


def block_contingency_naive(u: CoPartition, v: CoPartition) -> ContingencyTable:
    """Block-level contingency table built cell by cell over the whole grid.

    Entry (p, q) counts grid cells lying in block p of ``u`` and block q of
    ``v``.  This is the O(I*J) reference path; it deliberately avoids the
    fast kernels so it can serve as an independent oracle for the
    Kronecker-product construction.
    """
    if u.grid_shape != v.grid_shape:
        raise DimensionMismatchError(f"dimension mismatch: grids {u.grid_shape} and {v.grid_shape} differ")
    lu, lv = u.cols.cluster_count, v.cols.cluster_count
    nrow = u.rows.cluster_count * lu
    ncol = v.rows.cluster_count * lv
    counts = [[0] * ncol for _ in range(nrow)]
    u_rows = u.rows.labels.tolist()
    u_cols = u.cols.labels.tolist()
    v_rows = v.rows.labels.tolist()
    v_cols = v.cols.labels.tolist()
    for i, (hu, hv) in enumerate(zip(u_rows, v_rows)):
        for j, (cu, cv) in enumerate(zip(u_cols, v_cols)):
            p = block_index(hu, cu, lu)
            q = block_index(hv, cv, lv)
            counts[p - 1][q - 1] += 1
    return ContingencyTable(counts)
