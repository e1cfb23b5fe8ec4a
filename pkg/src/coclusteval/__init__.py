"""Agreement indices between coclustering partitions.

The central quantity is the coclustering adjusted Rand index: the
adjusted Rand index of the block-level contingency table of two
co-partitions, computed through its factorization as a Kronecker product
of the row-side and column-side tables.  Classification error, extended
normalized mutual information, a perturbation simulator and a timing
harness round out the toolkit.

Hot counting kernels run on a compiled extension when it is available
and fall back to numpy otherwise; see coclusteval._kernels.
"""

from .ari import adjusted_rand_index, adjusted_rand_index_pairs, ari, rand_index, ri
from .bench import BenchRecord, median_elapsed, run_bench
from .cari import (
    block_contingency,
    cari,
    cari_from_table,
    coclustering_rand_index,
    factor_tables,
)
from .ce import (
    DEFAULT_EXHAUSTIVE_CAP,
    CeSolver,
    classification_error,
    classification_error_direct,
    row_distance,
)
from .errors import (
    CapacityError,
    CoclustevalError,
    ComputationError,
    ConfigError,
    DimensionMismatchError,
    InputError,
    LabelRangeError,
    ParseError,
    UndefinedIndexError,
)
from .formats import (
    IndexReport,
    build_report,
    format_bench_csv,
    format_copartition,
    format_trajectory_csv,
    parse_copartition,
    render_report,
)
from .mi import entropy, extended_mi, mutual_information, normalized_mi
from .partitions import (
    ContingencyTable,
    CoPartition,
    PairCounts,
    Partition,
    block_contingency_naive,
    block_index,
    block_unindex,
    contingency,
    pair_counts,
)
from .simulate import (
    SimConfig,
    TrajectoryRecord,
    cluster_sizes,
    make_initial,
    perturb,
    run_trajectory,
)

__version__ = "0.1.0"

__all__ = [
    "BenchRecord",
    "CapacityError",
    "CeSolver",
    "CoPartition",
    "CoclustevalError",
    "ComputationError",
    "ConfigError",
    "ContingencyTable",
    "DEFAULT_EXHAUSTIVE_CAP",
    "DimensionMismatchError",
    "IndexReport",
    "InputError",
    "LabelRangeError",
    "PairCounts",
    "ParseError",
    "Partition",
    "SimConfig",
    "TrajectoryRecord",
    "UndefinedIndexError",
    "adjusted_rand_index",
    "adjusted_rand_index_pairs",
    "ari",
    "block_contingency",
    "block_contingency_naive",
    "block_index",
    "block_unindex",
    "build_report",
    "cari",
    "cari_from_table",
    "classification_error",
    "classification_error_direct",
    "cluster_sizes",
    "coclustering_rand_index",
    "contingency",
    "entropy",
    "extended_mi",
    "factor_tables",
    "format_bench_csv",
    "format_copartition",
    "format_trajectory_csv",
    "make_initial",
    "median_elapsed",
    "mutual_information",
    "normalized_mi",
    "pair_counts",
    "parse_copartition",
    "perturb",
    "rand_index",
    "render_report",
    "ri",
    "row_distance",
    "run_bench",
    "run_trajectory",
]
