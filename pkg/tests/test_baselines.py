import statistics

import pytest
from scipy.optimize import differential_evolution

from iwso.baselines import ALGORITHMS, BaselineParams, run_baseline
from iwso.benchmarks import make_objective, search_space, sphere
from iwso.core import IwsoParams, optimize
from iwso.space import SearchSpace, WeightedObjective


def test_defaults():
    ga = BaselineParams("ga")
    assert (ga.crossover_rate, ga.mutation_rate, ga.pop_size, ga.t_max) == (0.8, 0.1, 30, 50)
    pso = BaselineParams("PSO")
    assert (pso.algorithm, pso.w, pso.c1, pso.c2, pso.velocity_max) == ("pso", 0.5, 1.5, 1.5, 2.0)
    de = BaselineParams("de")
    assert (de.f, de.cr) == (0.5, 0.9)


@pytest.mark.parametrize(
    "kw",
    [
        dict(algorithm="aco"), dict(algorithm="ga", crossover_rate=1.2),
        dict(algorithm="ga", mutation_rate=-0.1), dict(algorithm="de", cr=2.0),
        dict(algorithm="pso", w=0.0), dict(algorithm="pso", c1=-1.0),
        dict(algorithm="de", f=0.0), dict(algorithm="de", pop_size=3),
        dict(algorithm="ga", t_max=0), dict(algorithm="ga", tournament_size=40),
    ],
)
def test_invalid_params(kw):
    with pytest.raises(ValueError):
        BaselineParams(**kw)


@pytest.mark.parametrize("algo", ALGORITHMS)
def test_constant_objective(algo):
    obj = WeightedObjective.single(lambda x: 3.5)
    res = run_baseline(BaselineParams(algo, pop_size=6, t_max=5), obj, SearchSpace.uniform(-1, 1, 3), 0)
    assert res.best_fitness == 3.5


@pytest.mark.parametrize("algo", ALGORITHMS)
def test_determinism_schema_and_monotonicity(algo):
    obj, space = make_objective("f8", dim=6), search_space("f8", 6)
    p = BaselineParams(algo, pop_size=10, t_max=25)
    a, b = run_baseline(p, obj, space, 5), run_baseline(p, obj, space, 5)
    assert a.same_outcome(b)
    assert not a.same_outcome(run_baseline(p, obj, space, 6))
    assert a.algorithm == algo
    assert len(a.trace) == 25
    assert [r.iteration for r in a.trace] == list(range(1, 26))
    bests = [r.best_fitness for r in a.trace]
    assert all(y <= x for x, y in zip(bests, bests[1:]))
    assert bests[-1] == a.best_fitness
    assert space.contains(a.best_point)
    assert a.best_fitness == obj(a.best_point)
    assert all(r.matchmaker_m is None and r.eliminated_count == 0 for r in a.trace)
    # Same result type and fields as IWSO.
    iwso = optimize(obj, space, IwsoParams(pop_size=10, t_max=25), 5)
    assert type(iwso) is type(a)
    assert type(iwso.trace[0]) is type(a.trace[0])


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        run_baseline(BaselineParams("de"), make_objective("f3"), SearchSpace.uniform(-1, 1, 3), 0)


def test_de_sphere_median():
    obj, space = make_objective("f20", dim=10), search_space("f20", 10)
    p = BaselineParams("de", pop_size=30, t_max=200)
    finals = [run_baseline(p, obj, space, seed).best_fitness for seed in range(20)]
    assert statistics.median(finals) <= 1e-2


def test_de_band_is_met_by_reference_implementation():
    # Independent DE/rand/1/bin at the same budget lands in the same band.
    finals = []
    for seed in range(5):
        res = differential_evolution(
            lambda x: sphere(x), [(-5.12, 5.12)] * 10, strategy="rand1bin", popsize=3,
            maxiter=200, mutation=0.5, recombination=0.9, init="random", tol=0,
            polish=False, seed=seed,
        )
        finals.append(res.fun)
    assert statistics.median(finals) <= 1e-2
