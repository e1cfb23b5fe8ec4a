"""Perturbation walk over co-partitions with per-iteration index tracking.

Starting from a fixed co-partition, each iteration redraws the label of
one random row coordinate and one random column coordinate, and all
indices are computed between the initial co-partition and the drifted
one.  Randomness comes from a single numpy Generator (PCG64) seeded from
the config, so a (seed, config) pair pins the whole trajectory bit for
bit.  The generator is consumed in a fixed order: row coordinate, row
label, column coordinate, column label, once per iteration.
"""

from dataclasses import dataclass, field
from time import perf_counter_ns

import numpy as np

from .cari import cari
from .ce import CeSolver, classification_error
from .errors import ConfigError
from .mi import extended_mi
from .partitions import CoPartition, Partition

VARIANT_ORDER = ("full", "fixed_rows", "fixed_cols")


@dataclass(frozen=True)
class SimConfig:
    """Shape, length and randomness of one perturbation trajectory.

    ``balance`` is either "balanced" (cluster sizes as equal as possible,
    earlier clusters take the remainder) or "preset:<s1,s2,...>" giving
    explicit per-cluster sizes that must sum to the axis length on both
    axes.  ``variants`` additionally tracks the pairs where only the
    columns move (fixed_rows) and where only the rows move (fixed_cols).
    """

    rows: int
    cols: int
    row_clusters: int
    col_clusters: int
    iterations: int = 100
    seed: int = 0
    balance: str = "balanced"
    variants: bool = False
    ce_solver: CeSolver = field(default_factory=CeSolver)
    strict_relabel: bool = False

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ConfigError("grid sizes must be >= 1")
        if self.row_clusters < 1 or self.col_clusters < 1:
            raise ConfigError("cluster counts must be >= 1")
        if self.iterations < 0:
            raise ConfigError("iterations must be >= 0")
        # fail on malformed balance up front, not at trajectory start
        cluster_sizes(self.rows, self.row_clusters, self.balance)
        cluster_sizes(self.cols, self.col_clusters, self.balance)


@dataclass(frozen=True)
class TrajectoryRecord:
    """Index values and their computation times for one iteration/variant."""

    iteration: int
    variant: str
    cari: float
    emi: float
    ce: float
    one_minus_ce: float
    t_cari_ns: int
    t_emi_ns: int
    t_ce_ns: int


def cluster_sizes(n: int, k: int, balance: str = "balanced") -> list[int]:
    """Per-cluster sizes for an axis of length n split into k clusters."""
    if balance == "balanced":
        base, extra = divmod(n, k)
        return [base + 1 if i < extra else base for i in range(k)]
    if balance.startswith("preset:"):
        body = balance[len("preset:") :]
        try:
            sizes = [int(tok) for tok in body.split(",") if tok != ""]
        except ValueError:
            raise ConfigError(f"preset sizes must be integers, got {body!r}") from None
        if len(sizes) != k:
            raise ConfigError(f"preset lists {len(sizes)} sizes for {k} clusters")
        if any(s < 0 for s in sizes):
            raise ConfigError("preset sizes must be non-negative")
        if sum(sizes) != n:
            raise ConfigError(f"preset sizes sum to {sum(sizes)}, axis has {n} elements")
        return sizes
    raise ConfigError(f"balance must be 'balanced' or 'preset:<sizes>', got {balance!r}")


def make_initial(n: int, k: int, balance: str = "balanced") -> Partition:
    """Initial partition with the requested sizes, labels in contiguous runs."""
    sizes = cluster_sizes(n, k, balance)
    labels = np.repeat(np.arange(1, k + 1, dtype=np.int64), sizes)
    return Partition(labels, k)


def perturb(p: Partition, rng: np.random.Generator, strict: bool = False) -> Partition:
    """Redraw the label of one uniformly chosen coordinate.

    The new label is uniform over 1..cluster_count and may equal the old
    one, so the output differs from the input in at most one coordinate.
    With ``strict`` the label is redrawn until it differs (single-cluster
    partitions are returned unchanged, there is nothing to redraw to).
    """
    k = p.cluster_count
    idx = int(rng.integers(0, p.n))
    new_label = int(rng.integers(1, k + 1))
    if strict:
        if k == 1:
            return p
        while new_label == p.labels[idx]:
            new_label = int(rng.integers(1, k + 1))
    labels = p.labels.copy()
    labels[idx] = new_label
    return Partition(labels, k)


def _measure(iteration: int, variant: str, base: CoPartition, current: CoPartition, solver: CeSolver) -> TrajectoryRecord:
    t0 = perf_counter_ns()
    cari_value = cari(base, current)
    t1 = perf_counter_ns()
    emi_value = extended_mi(base, current)
    t2 = perf_counter_ns()
    ce_value = classification_error(base, current, solver)
    t3 = perf_counter_ns()
    return TrajectoryRecord(
        iteration=iteration,
        variant=variant,
        cari=cari_value,
        emi=emi_value,
        ce=ce_value,
        one_minus_ce=1.0 - ce_value,
        t_cari_ns=t1 - t0,
        t_emi_ns=t2 - t1,
        t_ce_ns=t3 - t2,
    )


def run_trajectory(cfg: SimConfig) -> list[TrajectoryRecord]:
    """Run the perturbation walk and score every iteration.

    Each iteration perturbs the row partition, then the column partition,
    and emits one record per enabled variant: "full" compares the initial
    co-partition against the current one, "fixed_rows" against (initial
    rows, current columns), "fixed_cols" against (current rows, initial
    columns).
    """
    rng = np.random.default_rng(cfg.seed)
    z0 = make_initial(cfg.rows, cfg.row_clusters, cfg.balance)
    w0 = make_initial(cfg.cols, cfg.col_clusters, cfg.balance)
    base = CoPartition(z0, w0)
    z, w = z0, w0
    records = []
    for i in range(1, cfg.iterations + 1):
        z = perturb(z, rng, cfg.strict_relabel)
        w = perturb(w, rng, cfg.strict_relabel)
        pairs = [("full", CoPartition(z, w))]
        if cfg.variants:
            pairs.append(("fixed_rows", CoPartition(z0, w)))
            pairs.append(("fixed_cols", CoPartition(z, w0)))
        for variant, current in pairs:
            records.append(_measure(i, variant, base, current, cfg.ce_solver))
    return records
