"""Indian Wedding System Optimization with benchmark suite, baselines and experiment harness."""

from .baselines import BaselineParams, run_baseline
from .benchmarks import FUNCTIONS, FunctionSpec, evaluate, function_spec, make_objective, search_space
from .core import (
    IwsoParams,
    OptimizerState,
    RunResult,
    StopReason,
    TraceRecord,
    elimination_factor,
    elitist_select,
    expected_match,
    matchmaker_factor,
    optimize,
    reinitialize_candidate,
    step,
    update_candidate,
)
from .estimators import IWSO, DifferentialEvolution, GeneticAlgorithm, ParticleSwarm
from .harness import (
    StatsSummary,
    SweepReport,
    compare,
    run_replicates,
    sensitivity_sweep_matchmaker,
    sensitivity_sweep_tmax,
)
from .space import (
    Candidate,
    EvaluationError,
    RandomSource,
    SearchSpace,
    WeightedObjective,
    clamp,
    sample_uniform_point,
    weighted_fitness,
)

__version__ = "0.1.0"
