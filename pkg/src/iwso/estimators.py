"""scikit-learn style optimizer objects.

Hyperparameters go to the constructor; ``fit(objective, bounds)`` runs the
search and stores results in trailing-underscore attributes::

    >>> import numpy as np
    >>> opt = IWSO(t_max=20, random_state=0).fit(lambda x: float(np.sum(x**2)), [(-5, 5)] * 3)
    >>> opt.best_x_.shape
    (3,)

Because the classes derive from ``BaseEstimator`` they support
``get_params``/``set_params`` and ``sklearn.base.clone``.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .baselines import BaselineParams, run_baseline
from .core import IwsoParams, RunResult, optimize
from .validation import check_bounds, check_objective, check_seed

__all__ = ["IWSO", "DifferentialEvolution", "GeneticAlgorithm", "ParticleSwarm"]


class _BaseOptimizer(BaseEstimator):
    """Shared ``fit`` machinery; subclasses supply ``_run``."""

    def fit(self, objective, bounds, weights=None):
        """Minimize ``objective`` over ``bounds``.

        Parameters
        ----------
        objective : callable or list of callables
            Each maps an ndarray of shape ``(n_dims,)`` to a float. Several
            callables are combined as a weighted sum.
        bounds : array-like of shape (n_dims, 2), or (lower, upper)
        weights : array-like, optional
            Weights of the components; equal weights by default.

        Returns
        -------
        self
        """
        space = check_bounds(bounds)
        obj = check_objective(objective, weights)
        seed = check_seed(self.random_state)
        result = self._run(obj, space, seed)
        self.result_ = result
        self.best_x_ = np.asarray(result.best_point, dtype=float)
        self.best_fitness_ = float(result.best_fitness)
        self.n_evaluations_ = result.evaluations
        self.n_iter_ = len(result.trace)
        self.convergence_ = np.array([r.best_fitness for r in result.trace])
        self.stop_reason_ = result.stop_reason.value
        self.seed_ = seed
        return self

    def score(self, objective=None, bounds=None):
        """Negated best fitness, so larger is better as scikit-learn expects."""
        check_is_fitted(self, "best_fitness_")
        return -self.best_fitness_

    def _run(self, obj, space, seed) -> RunResult:  # pragma: no cover
        raise NotImplementedError


class IWSO(_BaseOptimizer):
    """Indian Wedding System Optimization.

    Parameters
    ----------
    pop_size : int, default=30
    t_max : int, default=50
        Iteration budget.
    m_max, m_min : float, default=1.2, 0.05
        Start and end of the matchmaker (perturbation) schedule.
    alpha_min, alpha_max : float, default=0.5, 1.5
        Start and end of the elimination-factor schedule.
    beta : float, default=0.3
        Pull of reinitialized candidates toward ``best - mean``.
    gamma : float, default=0.5
        Scale of the normal noise added on reinitialization.
    r1 : float or None, default=None
        Fixed attraction coefficient; ``None`` draws it per candidate.
    stall_limit : int or None, default=None
        Stop after this many iterations without improvement.
    target_fitness : float or None, default=None
        Stop once the best fitness reaches this value.
    random_state : int, RandomState or None, default=None

    Attributes
    ----------
    best_x_ : ndarray of shape (n_dims,)
    best_fitness_ : float
    convergence_ : ndarray of shape (n_iter_,)
        Best fitness after each iteration.
    result_ : RunResult
        Full record, trace included.
    """

    def __init__(
        self,
        pop_size=30,
        t_max=50,
        m_max=1.2,
        m_min=0.05,
        alpha_min=0.5,
        alpha_max=1.5,
        beta=0.3,
        gamma=0.5,
        r1=None,
        stall_limit=None,
        target_fitness=None,
        random_state=None,
    ):
        self.pop_size = pop_size
        self.t_max = t_max
        self.m_max = m_max
        self.m_min = m_min
        self.alpha_min = alpha_min
        self.alpha_max = alpha_max
        self.beta = beta
        self.gamma = gamma
        self.r1 = r1
        self.stall_limit = stall_limit
        self.target_fitness = target_fitness
        self.random_state = random_state

    def _run(self, obj, space, seed):
        params = IwsoParams(**{k: v for k, v in self.get_params().items() if k != "random_state"})
        return optimize(obj, space, params, seed)


class _Baseline(_BaseOptimizer):
    _algorithm = ""

    def _run(self, obj, space, seed):
        knobs = {k: v for k, v in self.get_params().items() if k != "random_state"}
        return run_baseline(BaselineParams(self._algorithm, **knobs), obj, space, seed)


class GeneticAlgorithm(_Baseline):
    """Real-coded GA: tournament selection, uniform crossover, Gaussian mutation, one elite."""

    _algorithm = "ga"

    def __init__(self, pop_size=30, t_max=50, crossover_rate=0.8, mutation_rate=0.1,
                 tournament_size=2, mutation_scale=0.1, random_state=None):
        self.pop_size = pop_size
        self.t_max = t_max
        self.crossover_rate = crossover_rate
        self.mutation_rate = mutation_rate
        self.tournament_size = tournament_size
        self.mutation_scale = mutation_scale
        self.random_state = random_state


class ParticleSwarm(_Baseline):
    """Global-best particle swarm with a velocity clamp."""

    _algorithm = "pso"

    def __init__(self, pop_size=30, t_max=50, w=0.5, c1=1.5, c2=1.5, velocity_max=2.0,
                 random_state=None):
        self.pop_size = pop_size
        self.t_max = t_max
        self.w = w
        self.c1 = c1
        self.c2 = c2
        self.velocity_max = velocity_max
        self.random_state = random_state


class DifferentialEvolution(_Baseline):
    """DE/rand/1/bin."""

    _algorithm = "de"

    def __init__(self, pop_size=30, t_max=50, f=0.5, cr=0.9, random_state=None):
        self.pop_size = pop_size
        self.t_max = t_max
        self.f = f
        self.cr = cr
        self.random_state = random_state
