"""Replicated runs, summary statistics, sensitivity sweeps and comparisons.

Run ``j`` of any experiment uses seed ``base_seed + j``, for every algorithm,
so results never depend on how runs are scheduled across workers.
"""

from __future__ import annotations

import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .baselines import ALGORITHMS as BASELINES, BaselineParams, run_baseline
from .benchmarks import function_spec, make_objective, search_space
from .core import IwsoParams, RunResult, optimize
from .space import RandomSource

__all__ = [
    "MATCHMAKER_CASES",
    "StatsSummary",
    "SweepReport",
    "TMAX_GRID",
    "compare",
    "default_params",
    "run_replicates",
    "run_single",
    "sensitivity_sweep_matchmaker",
    "sensitivity_sweep_tmax",
    "summarize",
]

ALGORITHMS = ("iwso",) + BASELINES
TMAX_GRID = (125, 250, 375, 500)
# (m_max, m_min) per case study.
MATCHMAKER_CASES = {
    "C1": (1.2, 0.3),
    "C2": (1.4, 0.2),
    "C3": (1.8, 0.05),
    "C4": (2.0, 1.0),
}
NOISE_STREAM = 1

Params = Union[IwsoParams, BaselineParams]


class PerRun(NamedTuple):
    seed: int
    best_fitness: float
    runtime: float


@dataclass
class StatsSummary:
    """Aggregate of replicated runs of one algorithm on one function.

    ``std`` is the sample standard deviation (zero for a single run) and
    ``mean_runtime`` is in seconds.
    """

    algorithm: str
    function: str
    n_runs: int
    mean: float
    std: float
    best: float
    mean_runtime: float
    per_run: list
    runs: list = field(default_factory=list, repr=False)


@dataclass
class SweepReport:
    swept_parameter: str
    grid: list
    functions: list
    cells: dict

    def cell(self, function: str, value) -> StatsSummary:
        return self.cells[(function, value)]

    def summaries(self) -> list:
        """Cells ordered by function, then grid value."""
        return [self.cells[(f, v)] for f in self.functions for v in self.grid]


def normalize_algorithm(name: str) -> str:
    algo = str(name).strip().lower()
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {name!r}; expected one of {ALGORITHMS}")
    return algo


def default_params(algorithm: str, pop_size: int = 30, t_max: int = 50) -> Params:
    algo = normalize_algorithm(algorithm)
    if algo == "iwso":
        return IwsoParams(pop_size=pop_size, t_max=t_max)
    return BaselineParams(algo, pop_size=pop_size, t_max=t_max)


def _check_params(algorithm: str, params: Params) -> None:
    expected = IwsoParams if algorithm == "iwso" else BaselineParams
    if not isinstance(params, expected):
        raise TypeError(f"{algorithm} needs {expected.__name__}, got {type(params).__name__}")
    if algorithm != "iwso" and params.algorithm != algorithm:
        raise ValueError(f"params are for {params.algorithm}, not {algorithm}")


def run_single(
    algorithm: str, params: Params, function: str, seed: int, dim: Optional[int] = None
) -> RunResult:
    """One seeded run of ``algorithm`` on a benchmark function."""
    algorithm = normalize_algorithm(algorithm)
    _check_params(algorithm, params)
    spec = function_spec(function)
    noise = RandomSource(seed).derive(NOISE_STREAM) if spec.noisy else None
    obj = make_objective(spec.id, dim=dim, rng=noise)
    space = search_space(spec.id, dim)
    if algorithm == "iwso":
        return optimize(obj, space, params, seed)
    return run_baseline(params, obj, space, seed)


def _run_task(task):
    return run_single(*task)


def summarize(algorithm: str, function: str, runs: Sequence[RunResult]) -> StatsSummary:
    """Mean, sample std, best and mean runtime over ``runs``."""
    if not runs:
        raise ValueError("cannot summarize zero runs")
    per_run = [PerRun(r.seed, r.best_fitness, r.runtime) for r in runs]
    summary = summarize_values(algorithm, function, per_run)
    summary.runs = list(runs)
    return summary


def summarize_values(algorithm: str, function: str, per_run: Sequence[PerRun]) -> StatsSummary:
    values = [p.best_fitness for p in per_run]
    return StatsSummary(
        algorithm=algorithm,
        function=function,
        n_runs=len(values),
        mean=statistics.fmean(values),
        std=statistics.stdev(values) if len(values) > 1 else 0.0,
        best=min(values),
        mean_runtime=statistics.fmean(p.runtime for p in per_run),
        per_run=list(per_run),
    )


def run_replicates(
    algorithm: str,
    params: Optional[Params],
    function: str,
    n_runs: int = 30,
    base_seed: int = 0,
    dim: Optional[int] = None,
    workers: int = 1,
    label: Optional[str] = None,
) -> StatsSummary:
    """Run seeds ``base_seed .. base_seed + n_runs - 1`` and summarize.

    Parameters
    ----------
    algorithm : {"iwso", "ga", "pso", "de"}
    params : IwsoParams or BaselineParams, optional
        Defaults to the algorithm's standard settings.
    function : str
        Benchmark id or name.
    workers : int
        Process count; 1 runs everything in the calling process.
    label : str, optional
        Algorithm label stored in the summary (sweeps tag their cells).
    """
    algorithm = normalize_algorithm(algorithm)
    if not isinstance(n_runs, int) or n_runs < 1:
        raise ValueError(f"n_runs must be a positive integer, got {n_runs!r}")
    if params is None:
        params = default_params(algorithm)
    _check_params(algorithm, params)
    fid = function_spec(function).id
    tasks = [(algorithm, params, fid, base_seed + j, dim) for j in range(n_runs)]
    if workers > 1 and n_runs > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(_run_task, tasks))
    else:
        runs = [_run_task(t) for t in tasks]
    return summarize(label or algorithm, fid, runs)


def sensitivity_sweep_tmax(
    functions: Iterable[str],
    grid: Sequence[int] = TMAX_GRID,
    n_runs: int = 30,
    base_seed: int = 0,
    params: Optional[IwsoParams] = None,
    workers: int = 1,
) -> SweepReport:
    """IWSO at each ``t_max`` in ``grid``, all else at ``params``."""
    base = params or IwsoParams()
    return _sweep(
        "t_max",
        functions,
        {t: replace(base, t_max=int(t)) for t in grid},
        n_runs,
        base_seed,
        workers,
    )


def sensitivity_sweep_matchmaker(
    functions: Iterable[str],
    cases: Sequence[str] = tuple(MATCHMAKER_CASES),
    n_runs: int = 30,
    base_seed: int = 0,
    params: Optional[IwsoParams] = None,
    workers: int = 1,
) -> SweepReport:
    """IWSO under each (m_max, m_min) case of :data:`MATCHMAKER_CASES`."""
    base = params or IwsoParams()
    settings = {}
    for case in cases:
        if case not in MATCHMAKER_CASES:
            raise ValueError(f"unknown matchmaker case {case!r}")
        m_max, m_min = MATCHMAKER_CASES[case]
        settings[case] = replace(base, m_max=m_max, m_min=m_min)
    return _sweep("matchmaker", functions, settings, n_runs, base_seed, workers)


def _sweep(name, functions, settings, n_runs, base_seed, workers) -> SweepReport:
    fids = [function_spec(f).id for f in functions]
    if not fids:
        raise ValueError("sweep needs at least one function")
    cells = {}
    for fid in fids:
        for value, params in settings.items():
            cells[(fid, value)] = run_replicates(
                "iwso", params, fid, n_runs, base_seed,
                workers=workers, label=f"iwso@{name}={value}",
            )
    return SweepReport(name, list(settings), fids, cells)


def compare(
    algorithms: Sequence[str],
    function: str,
    budget: tuple = (30, 50),
    n_runs: int = 30,
    base_seed: int = 0,
    workers: int = 1,
) -> list:
    """One summary per algorithm under the same (pop_size, iterations) budget and seeds."""
    names = [normalize_algorithm(a) for a in algorithms]
    if not names:
        raise ValueError("compare needs at least one algorithm")
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate algorithms in {list(algorithms)}")
    pop_size, t_max = budget
    return [
        run_replicates(a, default_params(a, pop_size, t_max), function, n_runs, base_seed, workers=workers)
        for a in names
    ]
