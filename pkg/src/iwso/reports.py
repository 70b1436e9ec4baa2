"""CSV formats for run results, traces, summaries and the function registry.

Floats are written with ``repr`` so every value parses back exactly; missing
values are empty cells.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Iterable, NamedTuple, Optional

from .benchmarks import FUNCTIONS
from .core import TraceRecord

RESULTS_HEADER = (
    "run_id", "algorithm", "function", "seed", "best_fitness",
    "evaluations", "runtime_ms", "stop_reason",
)
TRACE_HEADER = (
    "iteration", "best_fitness", "mean_fitness", "matchmaker_m",
    "alpha", "e_match", "eliminated_count",
)
SUMMARY_HEADER = ("algorithm", "function", "n_runs", "mean", "std", "best", "mean_runtime_ms")
REGISTRY_HEADER = (
    "id", "name", "modality", "separability", "dim",
    "lower", "upper", "optimum_value", "optimum_point",
)
RUNTIME_COLUMNS = frozenset({"runtime_ms", "mean_runtime_ms"})


class ResultRow(NamedTuple):
    run_id: int
    algorithm: str
    function: str
    seed: int
    best_fitness: float
    evaluations: int
    runtime_ms: float
    stop_reason: str


class SummaryRow(NamedTuple):
    algorithm: str
    function: str
    n_runs: int
    mean: float
    std: float
    best: float
    mean_runtime_ms: float


class RegistryRow(NamedTuple):
    id: str
    name: str
    modality: str
    separability: str
    dim: int
    lower: float
    upper: float
    optimum_value: Optional[float]
    optimum_point: Optional[tuple]


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, tuple):
        return " ".join(repr(float(v)) for v in value)
    return str(value)


def _opt_float(text: str) -> Optional[float]:
    return None if text == "" else float(text)


def _point(text: str) -> Optional[tuple]:
    return None if text == "" else tuple(float(v) for v in text.split())


_PARSERS = {
    ResultRow: (int, str, str, int, float, int, float, str),
    SummaryRow: (str, str, int, float, float, float, float),
    TraceRecord: (int, float, float, _opt_float, _opt_float, _opt_float, int),
    RegistryRow: (str, str, str, str, int, float, float, _opt_float, _point),
}
_HEADERS = {
    ResultRow: RESULTS_HEADER,
    SummaryRow: SUMMARY_HEADER,
    TraceRecord: TRACE_HEADER,
    RegistryRow: REGISTRY_HEADER,
}


def format_csv(rows: Iterable[NamedTuple], kind: type) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_HEADERS[kind])
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def parse_csv(text: str, kind: type) -> list:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if tuple(header or ()) != _HEADERS[kind]:
        raise ValueError(f"unexpected header {header!r} for {kind.__name__}")
    parsers = _PARSERS[kind]
    return [kind(*(p(cell) for p, cell in zip(parsers, line))) for line in reader]


def write_csv(path, rows: Iterable[NamedTuple], kind: type) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_csv(rows, kind), encoding="utf-8")
    return path


def read_csv(path, kind: type) -> list:
    return parse_csv(Path(path).read_text(encoding="utf-8"), kind)


def result_rows(summary) -> list:
    """One row per retained run of a :class:`~iwso.harness.StatsSummary`."""
    return [
        ResultRow(
            run_id=k,
            algorithm=summary.algorithm,
            function=summary.function,
            seed=run.seed,
            best_fitness=float(run.best_fitness),
            evaluations=run.evaluations,
            runtime_ms=run.runtime * 1000.0,
            stop_reason=run.stop_reason.value,
        )
        for k, run in enumerate(summary.runs)
    ]


def summary_row(summary) -> SummaryRow:
    return SummaryRow(
        summary.algorithm,
        summary.function,
        summary.n_runs,
        float(summary.mean),
        float(summary.std),
        float(summary.best),
        summary.mean_runtime * 1000.0,
    )


def registry_rows() -> list:
    rows = []
    for spec in FUNCTIONS.values():
        optimum = spec.known_optimum()
        point, value = optimum if optimum else (None, None)
        rows.append(
            RegistryRow(
                spec.id, spec.name, spec.modality, spec.separability, spec.default_dim,
                spec.lower, spec.upper, value,
                tuple(float(v) for v in point) if point else None,
            )
        )
    return rows


def drop_runtime_columns(text: str) -> str:
    """CSV text with runtime columns removed, for determinism comparisons."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        return ""
    keep = [i for i, name in enumerate(rows[0]) if name not in RUNTIME_COLUMNS]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow([row[i] for i in keep])
    return buf.getvalue()
