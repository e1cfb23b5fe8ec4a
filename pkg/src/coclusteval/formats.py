"""Co-partition file format, comparison reports, and CSV serialization.

The partition file format is two whitespace-separated label lines, rows
first, optionally preceded by directives declaring cluster counts:

    #rows-clusters=3
    #cols-clusters=4
    1 1 3 2
    1 2 1 4 3

All serialization is locale-independent (period decimal separator) and
floats are printed with a fixed six decimals.
"""

from dataclasses import dataclass

from .ari import adjusted_rand_index
from .cari import cari, factor_tables
from .ce import CeSolver, classification_error
from .errors import ParseError
from .mi import extended_mi
from .partitions import CoPartition, Partition
from .simulate import TrajectoryRecord

TRAJECTORY_HEADER = "iteration,variant,cari,emi,ce,one_minus_ce,t_cari_ns,t_emi_ns,t_ce_ns"
BENCH_HEADER = "index,iteration,elapsed_ns"

_ROWS_DIRECTIVE = "#rows-clusters="
_COLS_DIRECTIVE = "#cols-clusters="


def _parse_directive(line: str, line_no: int) -> tuple[str, int]:
    for prefix, key in ((_ROWS_DIRECTIVE, "rows"), (_COLS_DIRECTIVE, "cols")):
        if line.startswith(prefix):
            body = line[len(prefix) :].strip()
            try:
                value = int(body)
            except ValueError:
                raise ParseError(f"directive value {body!r} is not an integer", line=line_no) from None
            if value < 1:
                raise ParseError(f"declared cluster count must be >= 1, got {value}", line=line_no)
            return key, value
    raise ParseError(f"unknown directive {line.split('=')[0]!r}", line=line_no)


def _parse_label_line(line: str, line_no: int, declared) -> Partition:
    values = []
    for col, tok in enumerate(line.split(), 1):
        try:
            value = int(tok)
        except ValueError:
            raise ParseError(f"label {tok!r} is not an integer", line=line_no, token=col) from None
        if value < 1:
            raise ParseError(f"label must be a positive integer, got {value}", line=line_no, token=col)
        if declared is not None and value > declared:
            raise ParseError(
                f"label {value} exceeds the declared cluster count {declared}", line=line_no, token=col
            )
        values.append(value)
    return Partition(values, declared)


def parse_copartition(text: str) -> CoPartition:
    """Parse the two-line label format into a CoPartition.

    Directives must precede the label lines; blank lines are ignored;
    cluster counts default to the largest observed label.
    """
    declared = {"rows": None, "cols": None}
    data_lines = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if data_lines:
                raise ParseError("directives must precede the label lines", line=line_no)
            key, value = _parse_directive(line, line_no)
            if declared[key] is not None:
                raise ParseError(f"duplicate #{key}-clusters directive", line=line_no)
            declared[key] = value
            continue
        data_lines.append((line_no, line))
    if len(data_lines) != 2:
        raise ParseError(f"expected 2 label lines (rows then columns), found {len(data_lines)}")
    rows = _parse_label_line(data_lines[0][1], data_lines[0][0], declared["rows"])
    cols = _parse_label_line(data_lines[1][1], data_lines[1][0], declared["cols"])
    return CoPartition(rows, cols)


def format_copartition(cp: CoPartition) -> str:
    """Serialize a CoPartition in the two-line format, directives included.

    Directives are always written so declared cluster counts survive a
    round trip even when trailing clusters are empty.
    """
    return (
        f"{_ROWS_DIRECTIVE}{cp.rows.cluster_count}\n"
        f"{_COLS_DIRECTIVE}{cp.cols.cluster_count}\n"
        + " ".join(str(x) for x in cp.rows.labels)
        + "\n"
        + " ".join(str(x) for x in cp.cols.labels)
        + "\n"
    )


@dataclass(frozen=True)
class IndexReport:
    """All agreement indices between two co-partitions, plus shape notes."""

    cari: float
    ari_rows: float
    ari_cols: float
    ce: float
    one_minus_ce: float
    extended_mi: float
    rows: int
    cols: int
    row_clusters: tuple[int, int]
    col_clusters: tuple[int, int]
    solver: str


def build_report(u: CoPartition, v: CoPartition, solver: CeSolver = CeSolver()) -> IndexReport:
    """Compute every index between two co-partitions over the same grid."""
    tz, tw = factor_tables(u, v)
    ce_value = classification_error(u, v, solver)
    return IndexReport(
        cari=cari(u, v),
        ari_rows=adjusted_rand_index(tz),
        ari_cols=adjusted_rand_index(tw),
        ce=ce_value,
        one_minus_ce=1.0 - ce_value,
        extended_mi=extended_mi(u, v),
        rows=u.rows.n,
        cols=u.cols.n,
        row_clusters=(u.rows.cluster_count, v.rows.cluster_count),
        col_clusters=(u.cols.cluster_count, v.cols.cluster_count),
        solver=solver.mode,
    )


def render_report(report: IndexReport) -> str:
    """Render a report as a JSON object with six-decimal index values."""
    lines = [
        "{",
        f'  "cari": {report.cari:.6f},',
        f'  "ari_rows": {report.ari_rows:.6f},',
        f'  "ari_cols": {report.ari_cols:.6f},',
        f'  "ce": {report.ce:.6f},',
        f'  "one_minus_ce": {report.one_minus_ce:.6f},',
        f'  "extended_mi": {report.extended_mi:.6f},',
        f'  "dims": {{"rows": {report.rows}, "cols": {report.cols}, '
        f'"row_clusters": [{report.row_clusters[0]}, {report.row_clusters[1]}], '
        f'"col_clusters": [{report.col_clusters[0]}, {report.col_clusters[1]}]}},',
        f'  "solver": "{report.solver}"',
        "}",
    ]
    return "\n".join(lines) + "\n"


def format_trajectory_csv(records: list[TrajectoryRecord], include_timings: bool = False) -> str:
    """Render trajectory records as CSV.

    Timing columns are zeroed unless requested, keeping same-seed outputs
    byte-identical; pass include_timings=True for the measured values.
    """
    lines = [TRAJECTORY_HEADER]
    for r in records:
        t = (r.t_cari_ns, r.t_emi_ns, r.t_ce_ns) if include_timings else (0, 0, 0)
        lines.append(
            f"{r.iteration},{r.variant},{r.cari:.6f},{r.emi:.6f},"
            f"{r.ce:.6f},{r.one_minus_ce:.6f},{t[0]},{t[1]},{t[2]}"
        )
    return "\n".join(lines) + "\n"


def format_bench_csv(records) -> str:
    """Render bench records as CSV rows of index name, iteration, nanoseconds."""
    lines = [BENCH_HEADER]
    for r in records:
        lines.append(f"{r.index},{r.iteration},{r.elapsed_ns}")
    return "\n".join(lines) + "\n"
