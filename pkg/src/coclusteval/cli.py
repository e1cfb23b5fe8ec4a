"""Command-line entry points.

Three subcommands: ``compare`` prints a JSON report of every index
between two partition files, ``simulate`` streams a perturbation
trajectory as CSV, and ``bench`` streams per-index timings as CSV.
Exit codes: 0 success, 1 computation failed (for example an undefined
index or an exceeded solver cap), 2 bad input (unparsable files, bad
flags, mismatched grids).
"""

import argparse
import sys

from . import _kernels
from .bench import DEFAULT_WARMUP, run_bench
from .ce import DEFAULT_EXHAUSTIVE_CAP, CeSolver
from .errors import ComputationError, InputError
from .formats import (
    build_report,
    format_bench_csv,
    format_trajectory_csv,
    parse_copartition,
    render_report,
)
from .simulate import SimConfig, run_trajectory


def _read_copartition(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return parse_copartition(text)
    except InputError as exc:
        raise type(exc)(f"{path}: {exc}") from exc


def _add_sim_flags(sub):
    sub.add_argument("--rows", type=int, required=True, help="number of row elements I")
    sub.add_argument("--cols", type=int, required=True, help="number of column elements J")
    sub.add_argument("--row-clusters", type=int, required=True, help="number of row clusters H")
    sub.add_argument("--col-clusters", type=int, required=True, help="number of column clusters L")
    sub.add_argument("--iters", type=int, default=100, help="trajectory length N")
    sub.add_argument("--seed", type=int, default=0, help="RNG seed (numpy PCG64)")
    sub.add_argument(
        "--balance",
        default="balanced",
        help="initial cluster sizes: 'balanced' or 'preset:<s1,s2,...>' summing to the axis length",
    )


def _cmd_compare(args):
    u = _read_copartition(args.file_a)
    v = _read_copartition(args.file_b)
    solver = CeSolver(mode=args.ce_mode, cap=args.ce_cap)
    sys.stdout.write(render_report(build_report(u, v, solver)))
    return 0


def _cmd_simulate(args):
    cfg = SimConfig(
        rows=args.rows,
        cols=args.cols,
        row_clusters=args.row_clusters,
        col_clusters=args.col_clusters,
        iterations=args.iters,
        seed=args.seed,
        balance=args.balance,
        variants=args.variants,
        strict_relabel=args.strict_relabel,
    )
    sys.stdout.write(format_trajectory_csv(run_trajectory(cfg), include_timings=args.timings))
    return 0


def _cmd_bench(args):
    if args.backend != "auto":
        _kernels.use_backend(args.backend)
    records = run_bench(
        grid=(args.rows, args.cols),
        clusters=(args.row_clusters, args.col_clusters),
        iterations=args.iters,
        ce_solver=CeSolver(mode=args.ce_mode, cap=args.ce_cap),
        warmup=args.warmup,
        seed=args.seed,
        balance=args.balance,
    )
    sys.stdout.write(format_bench_csv(records))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="coclusteval",
        description="Agreement indices between coclustering partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compare = sub.add_parser("compare", help="compute all indices between two partition files")
    compare.add_argument("file_a", help="first co-partition file (two label lines)")
    compare.add_argument("file_b", help="second co-partition file")
    compare.add_argument(
        "--ce-mode",
        choices=("assignment", "exhaustive"),
        default="assignment",
        help="classification-error solver",
    )
    compare.add_argument(
        "--ce-cap",
        type=int,
        default=DEFAULT_EXHAUSTIVE_CAP,
        help="largest cluster count the exhaustive solver accepts",
    )
    compare.set_defaults(func=_cmd_compare)

    simulate = sub.add_parser("simulate", help="run a perturbation trajectory, CSV on stdout")
    _add_sim_flags(simulate)
    simulate.add_argument(
        "--variants",
        action="store_true",
        help="also record the fixed-row and fixed-column comparison pairs",
    )
    simulate.add_argument(
        "--strict-relabel",
        action="store_true",
        help="redraw perturbed labels until they differ from the old label",
    )
    simulate.add_argument(
        "--timings",
        action="store_true",
        help="emit measured per-index times (breaks byte-identity across runs)",
    )
    simulate.set_defaults(func=_cmd_simulate)

    bench = sub.add_parser("bench", help="time each index over a trajectory, CSV on stdout")
    _add_sim_flags(bench)
    bench.add_argument(
        "--ce-mode",
        choices=("exhaustive", "assignment"),
        default="exhaustive",
        help="classification-error solver to time",
    )
    bench.add_argument(
        "--ce-cap",
        type=int,
        default=DEFAULT_EXHAUSTIVE_CAP,
        help="largest cluster count the exhaustive solver accepts",
    )
    bench.add_argument("--warmup", type=int, default=DEFAULT_WARMUP, help="discarded leading iterations")
    bench.add_argument(
        "--backend",
        choices=("auto", "pure", "native"),
        default="auto",
        help="force a kernel backend instead of the import-time choice",
    )
    bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ImportError as exc:
        # a forced backend that is not installed is an input problem
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
