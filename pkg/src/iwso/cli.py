"""Command-line front end: ``iwso run | compare | sweep | list``.

Settings come from built-in defaults, then an optional JSON config file,
then command-line flags. Exit status is 0 on success, 1 when a run fails
and 2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional

from . import harness, reports
from .benchmarks import FUNCTIONS, function_spec
from .core import IwsoParams, TraceRecord
from .space import EvaluationError

OUTPUT_DIR_ENV = "IWSO_OUTPUT_DIR"


class ConfigError(ValueError):
    pass


@dataclass
class CliConfig:
    algorithm: str = "iwso"
    function: Optional[str] = None
    pop_size: int = 30
    t_max: int = 50
    m_max: float = 1.2
    m_min: float = 0.05
    alpha_min: float = 0.5
    alpha_max: float = 1.5
    beta: float = 0.3
    gamma: float = 0.5
    n_runs: int = 30
    base_seed: int = 0
    output_path: Optional[str] = None
    trace: bool = False
    algorithms: tuple = ("iwso", "ga", "de")
    functions: Optional[tuple] = None
    sweep: str = "tmax"
    grid: tuple = harness.TMAX_GRID
    cases: tuple = tuple(harness.MATCHMAKER_CASES)
    workers: int = 1

    def iwso_params(self) -> IwsoParams:
        return IwsoParams(
            pop_size=self.pop_size, t_max=self.t_max, m_max=self.m_max, m_min=self.m_min,
            alpha_min=self.alpha_min, alpha_max=self.alpha_max, beta=self.beta, gamma=self.gamma,
        )

    def params_for(self, algorithm: str):
        if algorithm == "iwso":
            return self.iwso_params()
        return harness.default_params(algorithm, self.pop_size, self.t_max)

    def output(self, default_name: str) -> Path:
        if self.output_path:
            return Path(self.output_path)
        return Path(os.environ.get(OUTPUT_DIR_ENV, ".")) / default_name


_FIELD_TYPES = {
    "algorithm": str, "function": str, "pop_size": int, "t_max": int,
    "m_max": float, "m_min": float, "alpha_min": float, "alpha_max": float,
    "beta": float, "gamma": float, "n_runs": int, "base_seed": int,
    "output_path": str, "trace": bool, "workers": int, "sweep": str,
}
_LIST_FIELDS = {"algorithms": str, "functions": str, "grid": int, "cases": str}


def _coerce(key, value):
    if key in _LIST_FIELDS:
        items = value.split(",") if isinstance(value, str) else list(value)
        items = [str(v).strip() for v in items if str(v).strip()]
        try:
            return tuple(_LIST_FIELDS[key](v) for v in items)
        except ValueError:
            raise ConfigError(f"{key}: cannot parse {value!r}") from None
    kind = _FIELD_TYPES[key]
    if value is None:
        return None
    if kind is bool:
        if not isinstance(value, bool):
            raise ConfigError(f"{key} must be true or false, got {value!r}")
        return value
    if kind is int and (isinstance(value, bool) or isinstance(value, float) and not value.is_integer()):
        raise ConfigError(f"{key} must be an integer, got {value!r}")
    try:
        return kind(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{key}: cannot interpret {value!r} as {kind.__name__}") from None


def load_config(path) -> dict:
    """Read a flat JSON object of :class:`CliConfig` keys; unknown keys are errors."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a JSON object")
    known = {f.name for f in fields(CliConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    return {k: _coerce(k, v) for k, v in data.items()}


def build_config(args: argparse.Namespace) -> CliConfig:
    values = {}
    if getattr(args, "config", None):
        values.update(load_config(args.config))
    known = {f.name for f in fields(CliConfig)}
    for key, value in vars(args).items():
        if key in known:
            values[key] = _coerce(key, value)
    cfg = replace(CliConfig(), **values)
    validate(cfg)
    return cfg


def validate(cfg: CliConfig) -> None:
    try:
        cfg.algorithm = harness.normalize_algorithm(cfg.algorithm)
        cfg.algorithms = tuple(harness.normalize_algorithm(a) for a in cfg.algorithms)
        cfg.iwso_params()
        for algo in ("ga", "pso", "de"):
            cfg.params_for(algo)
        if cfg.function is not None:
            cfg.function = function_spec(cfg.function).id
        if cfg.functions is not None:
            cfg.functions = tuple(function_spec(f).id for f in cfg.functions)
    except KeyError as exc:
        raise ConfigError(exc.args[0]) from None
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from None
    if cfg.n_runs < 1:
        raise ConfigError(f"n_runs must be positive, got {cfg.n_runs}")
    if not 0 <= cfg.base_seed < 2 ** 64:
        raise ConfigError(f"base_seed must be an unsigned 64-bit integer, got {cfg.base_seed}")
    if cfg.workers < 1:
        raise ConfigError(f"workers must be positive, got {cfg.workers}")
    if cfg.sweep not in ("tmax", "matchmaker"):
        raise ConfigError(f"sweep must be 'tmax' or 'matchmaker', got {cfg.sweep!r}")
    if any(t < 1 for t in cfg.grid) or not cfg.grid:
        raise ConfigError("grid needs positive iteration counts")
    unknown = [c for c in cfg.cases if c not in harness.MATCHMAKER_CASES]
    if unknown or not cfg.cases:
        raise ConfigError(f"unknown matchmaker cases: {unknown}")


def cmd_run(cfg: CliConfig) -> int:
    if cfg.function is None:
        raise ConfigError("the run command needs --function")
    summary = harness.run_replicates(
        cfg.algorithm, cfg.params_for(cfg.algorithm), cfg.function,
        cfg.n_runs, cfg.base_seed, workers=cfg.workers,
    )
    out = reports.write_csv(cfg.output("results.csv"), reports.result_rows(summary), reports.ResultRow)
    if cfg.trace:
        for k, run in enumerate(summary.runs):
            path = out.with_name(f"{out.stem}_run{k}_trace.csv")
            reports.write_csv(path, run.trace, TraceRecord)
    sys.stdout.write(reports.format_csv([reports.summary_row(summary)], reports.SummaryRow))
    return 0


def cmd_compare(cfg: CliConfig) -> int:
    if cfg.function is None:
        raise ConfigError("the compare command needs --function")
    if len(set(cfg.algorithms)) != len(cfg.algorithms):
        raise ConfigError(f"duplicate algorithms: {','.join(cfg.algorithms)}")
    summaries = harness.compare(
        cfg.algorithms, cfg.function, (cfg.pop_size, cfg.t_max),
        cfg.n_runs, cfg.base_seed, workers=cfg.workers,
    )
    rows = [reports.summary_row(s) for s in summaries]
    reports.write_csv(cfg.output("compare.csv"), rows, reports.SummaryRow)
    sys.stdout.write(reports.format_csv(rows, reports.SummaryRow))
    return 0


def cmd_sweep(cfg: CliConfig) -> int:
    functions = cfg.functions or tuple(FUNCTIONS)
    if cfg.sweep == "tmax":
        report = harness.sensitivity_sweep_tmax(
            functions, cfg.grid, cfg.n_runs, cfg.base_seed, cfg.iwso_params(), cfg.workers
        )
    else:
        report = harness.sensitivity_sweep_matchmaker(
            functions, cfg.cases, cfg.n_runs, cfg.base_seed, cfg.iwso_params(), cfg.workers
        )
    rows = [reports.summary_row(s) for s in report.summaries()]
    reports.write_csv(cfg.output(f"sweep_{cfg.sweep}.csv"), rows, reports.SummaryRow)
    sys.stdout.write(reports.format_csv(rows, reports.SummaryRow))
    return 0


def cmd_list(cfg: CliConfig) -> int:
    rows = reports.registry_rows()
    if cfg.output_path:
        reports.write_csv(cfg.output_path, rows, reports.RegistryRow)
    sys.stdout.write(reports.format_csv(rows, reports.RegistryRow))
    return 0


COMMANDS = {"run": cmd_run, "compare": cmd_compare, "sweep": cmd_sweep, "list": cmd_list}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iwso", description="Indian Wedding System Optimization experiments."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    parser.set_defaults(_usage=parser.print_usage)
    S = argparse.SUPPRESS

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file of settings; flags override it")
    common.add_argument("--out", dest="output_path", default=S, help="output CSV path")
    common.add_argument("--runs", dest="n_runs", type=int, default=S)
    common.add_argument("--seed", dest="base_seed", type=int, default=S)
    common.add_argument("--workers", type=int, default=S, help="parallel run processes")
    common.add_argument("--pop-size", dest="pop_size", type=int, default=S)
    common.add_argument("--t-max", dest="t_max", type=int, default=S)
    for name in ("m_max", "m_min", "alpha_min", "alpha_max", "beta", "gamma"):
        common.add_argument("--" + name.replace("_", "-"), dest=name, type=float, default=S)

    p = sub.add_parser("run", parents=[common], help="replicated runs of one algorithm")
    p.add_argument("--algorithm", default=S, help="iwso, ga, pso or de")
    p.add_argument("--function", default=S, help="benchmark id (f1..f23) or name")
    p.add_argument("--trace", action="store_true", default=S, help="write per-run trace CSVs")

    p = sub.add_parser("compare", parents=[common], help="algorithms under one budget")
    p.add_argument("--algorithms", default=S, help="comma-separated, e.g. iwso,ga,de")
    p.add_argument("--function", default=S)

    p = sub.add_parser("sweep", parents=[common], help="IWSO sensitivity sweep")
    p.add_argument("--param", dest="sweep", choices=("tmax", "matchmaker"), default=S)
    p.add_argument("--functions", default=S, help="comma-separated ids; default all 23")
    p.add_argument("--grid", default=S, help="comma-separated t_max values")
    p.add_argument("--cases", default=S, help="comma-separated matchmaker cases (C1..C4)")

    p = sub.add_parser("list", help="print the benchmark registry as CSV")
    p.add_argument("--out", dest="output_path", default=S)

    for name, subparser in sub.choices.items():
        subparser.set_defaults(_usage=subparser.print_usage)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
        return COMMANDS[args.command](cfg)
    except ConfigError as exc:
        args._usage(sys.stderr)
        print(f"iwso {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (EvaluationError, OSError, RuntimeError, ArithmeticError) as exc:
        print(f"iwso {args.command}: run failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
