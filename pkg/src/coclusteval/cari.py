"""Coclustering adjusted Rand index.

Agreement between two co-partitions is the adjusted Rand index of their
block-level contingency table, the cross-tabulation of grid cells by the
(row cluster, column cluster) block they fall in under each co-partition.
That table factorises as the Kronecker product of the row-side and
column-side tables, so every sum the index needs can be computed from the
two small factor tables without touching the I*J grid.
"""

from . import _kernels as kernels
from .ari import _adjusted_from_sums, adjusted_rand_index, rand_index
from .errors import CapacityError, DimensionMismatchError
from .partitions import ContingencyTable, CoPartition, contingency

# Largest block table block_contingency will materialize.  The index
# itself never materializes anything; this only caps explicit table
# construction.
MAX_MATERIALIZED_CELLS = 50_000_000

_INT64_MAX = 2**63 - 1


def factor_tables(u: CoPartition, v: CoPartition) -> tuple[ContingencyTable, ContingencyTable]:
    """Row-side and column-side contingency tables of two co-partitions."""
    if u.grid_shape != v.grid_shape:
        raise DimensionMismatchError(f"dimension mismatch: grids {u.grid_shape} and {v.grid_shape} differ")
    return contingency(u.rows, v.rows), contingency(u.cols, v.cols)


def block_contingency(u: CoPartition, v: CoPartition, max_cells: int = MAX_MATERIALIZED_CELLS) -> ContingencyTable:
    """Materialize the block-level contingency table as a Kronecker product.

    Block (h, l) of ``u`` against block (h', l') of ``v`` holds
    n_rows[h, h'] * n_cols[l, l'] cells, laid out with the row-cluster-major
    block ids of block_index.
    """
    tz, tw = factor_tables(u, v)
    cells = tz.counts.size * tw.counts.size
    if cells > max_cells:
        raise CapacityError(f"block table would hold {cells} cells (limit {max_cells})")
    if tz.total * tw.total > _INT64_MAX:
        raise CapacityError("block counts exceed the 64-bit range; use cari() which streams")
    h1, h2 = tz.shape
    l1, l2 = tw.shape
    kron = (tz.counts[:, None, :, None] * tw.counts[None, :, None, :]).reshape(h1 * l1, h2 * l2)
    return ContingencyTable(kron)


def cari(u: CoPartition, v: CoPartition) -> float:
    """Coclustering adjusted Rand index between two co-partitions.

    Streams the block-table sums through the factor tables: the sum of
    C(cell, 2) over all blocks is the paired-product sum of the flattened
    factor cells, and the block margins are products of factor margins.
    Exact integers throughout, one float division at the end.
    """
    tz, tw = factor_tables(u, v)
    a_sum = kernels.sum_comb2_outer(tz.counts.reshape(-1), tw.counts.reshape(-1))
    r_sum = kernels.sum_comb2_outer(tz.row_margins, tw.row_margins)
    c_sum = kernels.sum_comb2_outer(tz.col_margins, tw.col_margins)
    return _adjusted_from_sums(a_sum, r_sum, c_sum, tz.total * tw.total)


def cari_from_table(u: CoPartition, v: CoPartition) -> float:
    """CARI by materializing the block table and adjusting it directly.

    Reference route kept for cross-checks; numerically identical to
    cari() because both reduce to the same exact integer sums.
    """
    return adjusted_rand_index(block_contingency(u, v))


def coclustering_rand_index(u: CoPartition, v: CoPartition) -> float:
    """Unadjusted Rand index over grid-cell pairs of two co-partitions."""
    return rand_index(block_contingency(u, v))
