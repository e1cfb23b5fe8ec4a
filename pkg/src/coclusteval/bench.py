"""Per-index timing harness over a perturbation trajectory.

Runs a plain trajectory and re-emits the per-iteration wall-clock cost
of each index as flat records, after dropping warm-up iterations.  Times
come from the monotonic nanosecond clock; everything runs on the calling
thread so rows are comparable across indices and cluster counts.
"""

from dataclasses import dataclass
from statistics import median

from .ce import CeSolver
from .simulate import SimConfig, run_trajectory

DEFAULT_WARMUP = 5

INDEX_ORDER = ("cari", "emi", "ce")


@dataclass(frozen=True)
class BenchRecord:
    """Wall-clock cost of one index at one trajectory iteration."""

    index: str
    iteration: int
    elapsed_ns: int


def run_bench(
    grid: tuple[int, int],
    clusters: tuple[int, int],
    iterations: int,
    ce_solver: CeSolver = CeSolver(mode="exhaustive"),
    warmup: int = DEFAULT_WARMUP,
    seed: int = 0,
    balance: str = "balanced",
) -> list[BenchRecord]:
    """Time every index over a trajectory; three records per kept iteration.

    The exhaustive CE solver is the default so the cost profile tracks the
    factorial permutation search; pass an assignment solver to lift the
    cluster-count cap.  Warm-up iterations are measured and discarded, and
    the surviving iterations are renumbered from 1.
    """
    if warmup < 0:
        raise ValueError("warmup must be >= 0")
    cfg = SimConfig(
        rows=grid[0],
        cols=grid[1],
        row_clusters=clusters[0],
        col_clusters=clusters[1],
        iterations=iterations + warmup,
        seed=seed,
        balance=balance,
        variants=False,
        ce_solver=ce_solver,
    )
    records = []
    for rec in run_trajectory(cfg):
        if rec.iteration <= warmup:
            continue
        it = rec.iteration - warmup
        records.append(BenchRecord("cari", it, rec.t_cari_ns))
        records.append(BenchRecord("emi", it, rec.t_emi_ns))
        records.append(BenchRecord("ce", it, rec.t_ce_ns))
    return records


def median_elapsed(records: list[BenchRecord]) -> dict[str, float]:
    """Median elapsed nanoseconds per index name."""
    by_index = {}
    for rec in records:
        by_index.setdefault(rec.index, []).append(rec.elapsed_ns)
    return {name: median(values) for name, values in by_index.items()}
