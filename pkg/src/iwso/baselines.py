"""GA, PSO and DE reference optimizers sharing the IWSO result schema."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .core import RunResult, StopReason, TraceRecord
from .space import Candidate, RandomSource, SearchSpace, WeightedObjective, clamp, sample_uniform_point

__all__ = ["ALGORITHMS", "BaselineParams", "run_baseline"]

ALGORITHMS = ("ga", "pso", "de")


@dataclass(frozen=True)
class BaselineParams:
    """Settings for one baseline run.

    Only the knobs of the chosen ``algorithm`` are used. ``tournament_size``
    and ``mutation_scale`` (Gaussian sigma as a fraction of each dimension's
    range) belong to GA.
    """

    algorithm: str
    pop_size: int = 30
    t_max: int = 50
    crossover_rate: float = 0.8
    mutation_rate: float = 0.1
    tournament_size: int = 2
    mutation_scale: float = 0.1
    w: float = 0.5
    c1: float = 1.5
    c2: float = 1.5
    velocity_max: float = 2.0
    f: float = 0.5
    cr: float = 0.9

    def __post_init__(self):
        algo = str(self.algorithm).lower()
        if algo not in ALGORITHMS:
            raise ValueError(f"unknown baseline {self.algorithm!r}; expected one of {ALGORITHMS}")
        object.__setattr__(self, "algorithm", algo)
        if not isinstance(self.pop_size, int) or self.pop_size < 2:
            raise ValueError(f"pop_size must be an integer >= 2, got {self.pop_size!r}")
        if algo == "de" and self.pop_size < 4:
            raise ValueError("DE needs pop_size >= 4")
        if not isinstance(self.t_max, int) or self.t_max < 1:
            raise ValueError(f"t_max must be a positive integer, got {self.t_max!r}")
        for name in ("crossover_rate", "mutation_rate", "cr"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
        for name in ("w", "c1", "c2", "f", "velocity_max", "mutation_scale"):
            value = getattr(self, name)
            if not value > 0.0:
                raise ValueError(f"{name} must be positive, got {value!r}")
        if not 1 <= self.tournament_size <= self.pop_size:
            raise ValueError(f"tournament_size must lie in [1, pop_size], got {self.tournament_size!r}")


def run_baseline(
    params: BaselineParams, obj: WeightedObjective, space: SearchSpace, seed: int
) -> RunResult:
    """Run the baseline named by ``params.algorithm`` for ``params.t_max`` generations."""
    if obj.dim is not None and obj.dim != space.dim:
        raise ValueError(f"objective expects dim {obj.dim}, search space has {space.dim}")
    rng = RandomSource(seed)
    start = time.perf_counter()
    loop = {"ga": _genetic, "pso": _swarm, "de": _differential}[params.algorithm]
    best, trace, evaluations = loop(params, obj, space, rng)
    return RunResult(
        algorithm=params.algorithm,
        best_point=best.position,
        best_fitness=best.fitness,
        trace=trace,
        runtime=time.perf_counter() - start,
        evaluations=evaluations,
        seed=seed,
        stop_reason=StopReason.BUDGET,
    )


def _initial(params, obj, space, rng):
    pop = []
    for _ in range(params.pop_size):
        pos = sample_uniform_point(space, rng)
        pop.append(Candidate(pos, obj(pos)))
    return pop


def _best(pop):
    return min(pop, key=lambda c: c.fitness)


def _record(t, best, fitnesses):
    return TraceRecord(t, best.fitness, math.fsum(fitnesses) / len(fitnesses))


def _genetic(params, obj, space, rng):
    """Tournament selection, uniform crossover, Gaussian mutation, one elite."""
    pop = _initial(params, obj, space, rng)
    n, dim = params.pop_size, space.dim
    sigma = [params.mutation_scale * (hi - lo) for lo, hi in zip(space.lower, space.upper)]
    best = _best(pop)
    evaluations = n
    trace = []

    def tournament():
        picks = rng.sample_indices(n, params.tournament_size)
        return min((pop[i] for i in picks), key=lambda c: c.fitness).position

    def mutate(genes):
        for j in range(dim):
            if rng.uniform() < params.mutation_rate:
                genes[j] += sigma[j] * rng.normal()
        return clamp(genes, space)

    for t in range(1, params.t_max + 1):
        children = []
        while len(children) < n - 1:
            a, b = list(tournament()), list(tournament())
            if rng.uniform() < params.crossover_rate:
                for j in range(dim):
                    if rng.uniform() < 0.5:
                        a[j], b[j] = b[j], a[j]
            children.append(mutate(a))
            if len(children) < n - 1:
                children.append(mutate(b))
        scored = [Candidate(c, obj(c)) for c in children]
        evaluations += len(scored)
        elite = _best(pop)
        pop = [elite] + scored
        leader = _best(scored)
        if leader.fitness < best.fitness:
            best = leader
        trace.append(_record(t, best, [c.fitness for c in scored]))
    return best, trace, evaluations


def _swarm(params, obj, space, rng):
    """Global-best PSO with zero initial velocity and a velocity clamp."""
    pop = _initial(params, obj, space, rng)
    dim, vmax = space.dim, params.velocity_max
    positions = [list(c.position) for c in pop]
    velocities = [[0.0] * dim for _ in pop]
    personal = list(pop)
    best = _best(pop)
    evaluations = len(pop)
    trace = []
    for t in range(1, params.t_max + 1):
        fitnesses = []
        for i, x in enumerate(positions):
            v = velocities[i]
            p, g = personal[i].position, best.position
            for j in range(dim):
                vj = (
                    params.w * v[j]
                    + params.c1 * rng.uniform() * (p[j] - x[j])
                    + params.c2 * rng.uniform() * (g[j] - x[j])
                )
                v[j] = -vmax if vj < -vmax else vmax if vj > vmax else vj
            moved = clamp([xj + vj for xj, vj in zip(x, v)], space)
            positions[i] = list(moved)
            fit = obj(moved)
            fitnesses.append(fit)
            if fit < personal[i].fitness:
                personal[i] = Candidate(moved, fit)
        evaluations += len(positions)
        leader = _best(personal)
        if leader.fitness < best.fitness:
            best = leader
        trace.append(_record(t, best, fitnesses))
    return best, trace, evaluations


def _differential(params, obj, space, rng):
    """DE/rand/1/bin with greedy one-to-one replacement."""
    pop = _initial(params, obj, space, rng)
    n, dim = params.pop_size, space.dim
    best = _best(pop)
    evaluations = n
    trace = []
    for t in range(1, params.t_max + 1):
        nxt = []
        fitnesses = []
        for i, target in enumerate(pop):
            r1, r2, r3 = rng.sample_indices(n - 1, 3)
            a, b, c = (pop[r if r < i else r + 1].position for r in (r1, r2, r3))
            forced = rng.integer(dim)
            trial = [
                a[j] + params.f * (b[j] - c[j])
                if j == forced or rng.uniform() < params.cr
                else target.position[j]
                for j in range(dim)
            ]
            trial = clamp(trial, space)
            fit = obj(trial)
            fitnesses.append(fit)
            nxt.append(target if target.fitness <= fit else Candidate(trial, fit))
        pop = nxt
        evaluations += n
        leader = _best(pop)
        if leader.fitness < best.fitness:
            best = leader
        trace.append(_record(t, best, fitnesses))
    return best, trace, evaluations
