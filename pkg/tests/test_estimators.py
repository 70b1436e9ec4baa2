import numpy as np
import pytest
from sklearn.base import clone

from iwso import IWSO, DifferentialEvolution, GeneticAlgorithm, ParticleSwarm
from iwso.core import IwsoParams, optimize
from iwso.space import SearchSpace, WeightedObjective
from iwso.validation import check_bounds, check_seed


def sphere(x):
    assert isinstance(x, np.ndarray)
    return float(np.sum(x ** 2))


@pytest.mark.parametrize("cls", [IWSO, GeneticAlgorithm, ParticleSwarm, DifferentialEvolution])
def test_fit_sets_attributes(cls):
    opt = cls(t_max=15, random_state=3).fit(sphere, [(-5, 5)] * 4)
    assert opt.best_x_.shape == (4,)
    assert opt.best_fitness_ == pytest.approx(sphere(opt.best_x_))
    assert opt.n_iter_ == 15 == len(opt.convergence_)
    assert np.all(np.diff(opt.convergence_) <= 0)
    assert opt.score() == -opt.best_fitness_
    again = clone(opt).fit(sphere, [(-5, 5)] * 4)
    assert again.best_fitness_ == opt.best_fitness_


def test_estimator_matches_functional_core():
    opt = IWSO(pop_size=10, t_max=12, random_state=8).fit(lambda x: float(np.sum(np.abs(x))),
                                                            (np.full(3, -2.0), np.full(3, 2.0)))
    ref = optimize(WeightedObjective.single(lambda x: sum(abs(v) for v in x)),
                   SearchSpace.uniform(-2, 2, 3), IwsoParams(pop_size=10, t_max=12), 8)
    assert opt.best_fitness_ == ref.best_fitness
    assert tuple(opt.best_x_) == ref.best_point
    assert opt.n_evaluations_ == 10 * 13


def test_params_round_trip():
    opt = IWSO(m_max=1.8, beta=0.2)
    assert opt.get_params()["m_max"] == 1.8
    opt.set_params(t_max=7)
    assert opt.t_max == 7
    assert DifferentialEvolution().get_params()["cr"] == 0.9


def test_weighted_components():
    opt = IWSO(random_state=0, t_max=40).fit(
        [lambda x: (x[0] - 1) ** 2, lambda x: (x[0] + 1) ** 2], [(-3, 3)], weights=[0.75, 0.25])
    assert opt.best_x_[0] == pytest.approx(0.5, abs=0.05)


def test_validation_helpers():
    assert check_bounds([(-1, 1), (0, 2)]) == SearchSpace((-1, 0), (1, 2))
    with pytest.raises(ValueError):
        check_bounds([(-1, 1, 3)])
    with pytest.raises(ValueError):
        check_bounds([(1, -1)])
    with pytest.raises(ValueError):
        check_bounds([(0, np.inf)])
    assert check_seed(5) == 5
    assert check_seed(np.random.RandomState(0)) == check_seed(np.random.RandomState(0))
    with pytest.raises(ValueError):
        check_seed(-3)
    assert 0 <= check_seed(None) < 2 ** 64
    with pytest.raises(ValueError):
        IWSO(pop_size=1).fit(sphere, [(-1, 1)])
    with pytest.raises(TypeError):
        IWSO().fit([sphere, 3], [(-1, 1)])
