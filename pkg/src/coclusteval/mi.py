"""Mutual information between partitions and its coclustering extension.

All quantities use natural logarithms.  The joint distribution of two
partitions is the contingency table scaled by n; each mutual-information
term is evaluated as P*(log P - log Pr - log Pc), which keeps the sum
bitwise equal to the entropy when the partitions coincide, so perfectly
matching co-partitions score exactly 2.
"""

import numpy as np

from .errors import DimensionMismatchError
from .partitions import ContingencyTable, CoPartition, Partition, contingency


def _distribution_entropy(counts, n: int) -> float:
    probs = counts[counts > 0] / n
    return float(-(probs * np.log(probs)).sum())


def entropy(p: Partition) -> float:
    """Shannon entropy of the cluster-size distribution, in nats."""
    return _distribution_entropy(p.sizes(), p.n)


def mutual_information(t: ContingencyTable) -> float:
    """Mutual information of the joint cell distribution of a contingency table.

    Zero cells are skipped; the result is non-negative and bounded by the
    smaller marginal entropy.
    """
    flat = t.counts.reshape(-1)
    mask = flat > 0
    n = t.total
    pj = flat[mask] / n
    pr = np.repeat(t.row_margins, t.counts.shape[1])[mask] / n
    pc = np.tile(t.col_margins, t.counts.shape[0])[mask] / n
    terms = pj * (np.log(pj) - np.log(pr) - np.log(pc))
    return float(terms.sum())


def _normalized_from_table(t: ContingencyTable) -> float:
    # marginal cluster sizes are exactly the table margins, so the
    # entropies come from the table already in hand
    denom = max(_distribution_entropy(t.row_margins, t.total), _distribution_entropy(t.col_margins, t.total))
    if denom == 0.0:
        return 1.0
    return mutual_information(t) / denom


def normalized_mi(p: Partition, q: Partition) -> float:
    """Mutual information scaled by the larger of the two entropies.

    In [0, 1].  When both entropies are zero the partitions are the same
    single cluster and the value is 1 by convention.
    """
    return _normalized_from_table(contingency(p, q))


def extended_mi(u: CoPartition, v: CoPartition) -> float:
    """Sum of the normalized row-side and column-side mutual informations.

    Ranges over [0, 2] and reaches exactly 2 for identical co-partitions.
    """
    if u.grid_shape != v.grid_shape:
        raise DimensionMismatchError(f"dimension mismatch: grids {u.grid_shape} and {v.grid_shape} differ")
    return _normalized_from_table(contingency(u.rows, v.rows)) + _normalized_from_table(
        contingency(u.cols, v.cols)
    )
