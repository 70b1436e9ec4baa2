"""Indian Wedding System Optimization (IWSO).

Each iteration moves every candidate toward the incumbent best with a
matchmaker-scaled random perturbation, reinitializes candidates that crowd
the best too closely, evaluates, and keeps each candidate's better of old and
new position.
"""

from __future__ import annotations

import enum
import math
import time
import warnings
from dataclasses import dataclass, field, replace
from typing import Callable, NamedTuple, Optional

from .space import (
    Candidate,
    EvaluationError,
    RandomSource,
    SearchSpace,
    WeightedObjective,
    clamp,
    sample_uniform_point,
)

__all__ = [
    "IwsoParams",
    "OptimizerState",
    "RunResult",
    "StopReason",
    "TraceRecord",
    "elimination_factor",
    "elitist_select",
    "expected_match",
    "initialize",
    "matchmaker_factor",
    "optimize",
    "reinitialize_candidate",
    "step",
    "update_candidate",
]

IMPROVEMENT_EPS = 1e-12
ZERO_SUM_GUARD = 1e-300


class StopReason(str, enum.Enum):
    BUDGET = "budget"
    STALL = "stall"
    TARGET = "target"


@dataclass(frozen=True)
class IwsoParams:
    """Control parameters of IWSO.

    ``r1=None`` draws the attraction coefficient afresh for every candidate
    and iteration; a float fixes it. ``beta`` and ``gamma`` outside their
    customary ranges only warn.
    """

    pop_size: int = 30
    t_max: int = 50
    m_max: float = 1.2
    m_min: float = 0.05
    alpha_min: float = 0.5
    alpha_max: float = 1.5
    beta: float = 0.3
    gamma: float = 0.5
    r1: Optional[float] = None
    stall_limit: Optional[int] = None
    target_fitness: Optional[float] = None

    def __post_init__(self):
        if not isinstance(self.pop_size, int) or self.pop_size < 2:
            raise ValueError(f"pop_size must be an integer >= 2, got {self.pop_size!r}")
        if not isinstance(self.t_max, int) or self.t_max < 1:
            raise ValueError(f"t_max must be a positive integer, got {self.t_max!r}")
        if not self.m_min > 0:
            raise ValueError(f"m_min must be positive, got {self.m_min!r}")
        if not self.m_max >= self.m_min:
            raise ValueError(f"m_max ({self.m_max}) must be >= m_min ({self.m_min})")
        if not self.alpha_min > 0:
            raise ValueError(f"alpha_min must be positive, got {self.alpha_min!r}")
        if not self.alpha_max >= self.alpha_min:
            raise ValueError(
                f"alpha_max ({self.alpha_max}) must be >= alpha_min ({self.alpha_min})"
            )
        if not (math.isfinite(self.beta) and math.isfinite(self.gamma)):
            raise ValueError("beta and gamma must be finite")
        if self.r1 is not None and not 0.0 <= self.r1 <= 1.0:
            raise ValueError(f"r1 must lie in [0, 1], got {self.r1!r}")
        if self.stall_limit is not None and (
            not isinstance(self.stall_limit, int) or self.stall_limit < 1
        ):
            raise ValueError(f"stall_limit must be a positive integer, got {self.stall_limit!r}")
        if self.target_fitness is not None and math.isnan(self.target_fitness):
            raise ValueError("target_fitness must not be NaN")
        if not 0.1 <= self.beta <= 0.5:
            warnings.warn(f"beta={self.beta} is outside the usual range [0.1, 0.5]", stacklevel=3)
        if not 0.2 <= self.gamma <= 0.8:
            warnings.warn(f"gamma={self.gamma} is outside the usual range [0.2, 0.8]", stacklevel=3)


class TraceRecord(NamedTuple):
    """One iteration of an optimizer run.

    Baselines leave the IWSO-specific schedule fields as ``None``.
    """

    iteration: int
    best_fitness: float
    mean_fitness: float
    matchmaker_m: Optional[float] = None
    alpha: Optional[float] = None
    e_match: Optional[float] = None
    eliminated_count: int = 0


@dataclass(frozen=True)
class OptimizerState:
    population: tuple
    global_best: Candidate
    t: int = 0
    last_m: float = math.nan
    last_alpha: float = math.nan
    last_e_match: float = math.nan
    eliminated_this_step: int = 0
    evaluations: int = 0
    record: Optional[TraceRecord] = None


@dataclass
class RunResult:
    """Outcome of one optimizer run, shared by IWSO and the baselines."""

    algorithm: str
    best_point: tuple
    best_fitness: float
    trace: list
    runtime: float
    evaluations: int
    seed: int
    stop_reason: StopReason = StopReason.BUDGET
    meta: dict = field(default_factory=dict)

    def same_outcome(self, other: "RunResult") -> bool:
        """Equality of everything except the wall-clock runtime."""
        return replace(self, runtime=0.0) == replace(other, runtime=0.0)


def _check_t(t: int, params: IwsoParams) -> None:
    if not 0 <= t <= params.t_max:
        raise ValueError(f"iteration {t} outside [0, {params.t_max}]")


def matchmaker_factor(t: int, params: IwsoParams) -> float:
    """Linearly decaying perturbation scale, ``m_max`` at 0 to ``m_min`` at ``t_max``."""
    _check_t(t, params)
    # Equals m_max - s * (m_max - m_min), written so both endpoints are exact.
    s = t / params.t_max
    return (1.0 - s) * params.m_max + s * params.m_min


def elimination_factor(t: int, params: IwsoParams) -> float:
    """Linearly growing elimination multiplier, ``alpha_min`` to ``alpha_max``."""
    _check_t(t, params)
    s = t / params.t_max
    return (1.0 - s) * params.alpha_min + s * params.alpha_max


def expected_match(fitnesses, best_fitness: float) -> float:
    """Ratio of the best fitness to the population's fitness sum.

    Signed values are used as they are, so the ratio can be negative; a sum
    within 1e-300 of zero yields 0.0.
    """
    total = math.fsum(fitnesses)
    if abs(total) < ZERO_SUM_GUARD:
        return 0.0
    return best_fitness / total


def update_candidate(
    x: Candidate,
    best: Candidate,
    m: float,
    rng: RandomSource,
    space: SearchSpace,
    r1: Optional[float] = None,
) -> Candidate:
    """Move ``x`` toward ``best`` and perturb it by ``m`` times U[-1, 1] noise.

    One scalar attraction coefficient is used for all dimensions; noise is
    drawn per dimension. The result is clamped and left unevaluated.
    """
    pos, target = x.position, best.position
    if len(pos) != space.dim or len(target) != space.dim:
        raise ValueError("candidate, best and search space dimensions disagree")
    if r1 is None:
        r1 = rng.uniform()
    eps = rng.symmetric_vector(space.dim)
    # Convex form of x + r1 * (best - x): exact at r1 = 0 and r1 = 1.
    keep = 1.0 - r1
    moved = [keep * xj + r1 * bj + m * ej for xj, bj, ej in zip(pos, target, eps)]
    return Candidate(clamp(moved, space))


def reinitialize_candidate(
    best: Candidate,
    pop_mean,
    params: IwsoParams,
    rng: RandomSource,
    space: SearchSpace,
) -> Candidate:
    """Fresh uniform sample shifted by ``beta * (best - mean)`` plus ``gamma``-scaled normal noise."""
    target = best.position
    if len(target) != space.dim or len(pop_mean) != space.dim:
        raise ValueError("best, population mean and search space dimensions disagree")
    u = rng.uniform_vector(space.dim)
    eps = rng.normal_vector(space.dim)
    beta, gamma = params.beta, params.gamma
    point = [
        lo + uj * (hi - lo) + beta * (bj - mj) + gamma * ej
        for uj, lo, hi, bj, mj, ej in zip(u, space.lower, space.upper, target, pop_mean, eps)
    ]
    return Candidate(clamp(point, space))


def elitist_select(incumbent: Candidate, challenger: Candidate) -> Candidate:
    """Keep the incumbent unless the challenger is strictly better."""
    if math.isnan(incumbent.fitness) or math.isnan(challenger.fitness):
        raise EvaluationError("cannot select between candidates with NaN fitness")
    return incumbent if incumbent.fitness <= challenger.fitness else challenger


def initialize(
    obj: WeightedObjective, space: SearchSpace, params: IwsoParams, rng: RandomSource
) -> OptimizerState:
    """Uniform random population, evaluated, with its best as incumbent."""
    population = []
    for _ in range(params.pop_size):
        pos = sample_uniform_point(space, rng)
        population.append(Candidate(pos, obj(pos)))
    best = min(population, key=lambda c: c.fitness)
    return OptimizerState(
        population=tuple(population), global_best=best, evaluations=len(population)
    )


def step(
    state: OptimizerState,
    obj: WeightedObjective,
    params: IwsoParams,
    rng: RandomSource,
    space: SearchSpace,
) -> OptimizerState:
    """Run one IWSO iteration and return the successor state.

    ``state`` is never mutated, so an evaluation error leaves it intact.
    """
    if state.t >= params.t_max:
        raise ValueError(f"iteration budget exhausted (t={state.t}, t_max={params.t_max})")
    t = state.t + 1
    m = matchmaker_factor(t, params)
    alpha = elimination_factor(t, params)
    best = state.global_best
    old = state.population
    n = len(old)

    moved = [update_candidate(c, best, m, rng, space, params.r1) for c in old]

    # Uses the fitness cached before this iteration's moves.
    e_match = expected_match([c.fitness for c in old], best.fitness)
    threshold = alpha * e_match
    eliminated = 0
    if threshold > 0.0:
        sums = [math.fsum(col) for col in zip(*(c.position for c in moved))]
        target = best.position
        for i, cand in enumerate(moved):
            dist = math.sqrt(sum((p - b) ** 2 for p, b in zip(cand.position, target)))
            if dist < threshold:
                mean = [s / n for s in sums]
                fresh = reinitialize_candidate(best, mean, params, rng, space)
                sums = [s + a - b for s, a, b in zip(sums, fresh.position, cand.position)]
                moved[i] = fresh
                eliminated += 1

    trial_fitness = [obj(c.position) for c in moved]
    population = tuple(
        elitist_select(prev, Candidate(c.position, f))
        for prev, c, f in zip(old, moved, trial_fitness)
    )
    leader = min(population, key=lambda c: c.fitness)
    global_best = elitist_select(best, leader)

    record = TraceRecord(
        iteration=t,
        best_fitness=global_best.fitness,
        mean_fitness=math.fsum(trial_fitness) / n,
        matchmaker_m=m,
        alpha=alpha,
        e_match=e_match,
        eliminated_count=eliminated,
    )
    return OptimizerState(
        population=population,
        global_best=global_best,
        t=t,
        last_m=m,
        last_alpha=alpha,
        last_e_match=e_match,
        eliminated_this_step=eliminated,
        evaluations=state.evaluations + n,
        record=record,
    )


def optimize(
    obj: WeightedObjective,
    space: SearchSpace,
    params: IwsoParams,
    seed: int,
    callback: Optional[Callable[[OptimizerState], None]] = None,
) -> RunResult:
    """Run IWSO from a fresh population until budget, stall or target.

    Parameters
    ----------
    obj : WeightedObjective
        Objective to minimize; it receives tuples of floats.
    space : SearchSpace
    params : IwsoParams
    seed : int
        Seed of the run's private :class:`RandomSource`.
    callback : callable, optional
        Called with every state, the initial one included.

    Returns
    -------
    RunResult
    """
    if not isinstance(params, IwsoParams):
        raise TypeError("params must be an IwsoParams instance")
    if obj.dim is not None and obj.dim != space.dim:
        raise ValueError(f"objective expects dim {obj.dim}, search space has {space.dim}")
    rng = RandomSource(seed)
    start = time.perf_counter()

    state = initialize(obj, space, params, rng)
    if callback is not None:
        callback(state)
    stop = _stop_reason(state, params, stalled=0)
    stalled = 0
    trace = []
    while stop is None:
        prev_best = state.global_best.fitness
        state = step(state, obj, params, rng, space)
        trace.append(state.record)
        if callback is not None:
            callback(state)
        if state.global_best.fitness < prev_best - IMPROVEMENT_EPS:
            stalled = 0
        else:
            stalled += 1
        stop = _stop_reason(state, params, stalled)

    return RunResult(
        algorithm="iwso",
        best_point=state.global_best.position,
        best_fitness=state.global_best.fitness,
        trace=trace,
        runtime=time.perf_counter() - start,
        evaluations=state.evaluations,
        seed=seed,
        stop_reason=stop,
    )


def _stop_reason(state: OptimizerState, params: IwsoParams, stalled: int):
    if params.target_fitness is not None and state.global_best.fitness <= params.target_fitness:
        return StopReason.TARGET
    if params.stall_limit is not None and stalled >= params.stall_limit:
        return StopReason.STALL
    if state.t >= params.t_max:
        return StopReason.BUDGET
    return None
