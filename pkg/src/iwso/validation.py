"""Input checks for the estimator-style API."""

from __future__ import annotations

import numbers
import secrets

import numpy as np
from sklearn.utils import check_array, check_random_state

from .space import SearchSpace, WeightedObjective


def check_bounds(bounds) -> SearchSpace:
    """Convert ``(lower, upper)`` or an ``(n_dims, 2)`` array to a :class:`SearchSpace`.

    A :class:`SearchSpace` passes through unchanged.
    """
    if isinstance(bounds, SearchSpace):
        return bounds
    if isinstance(bounds, tuple) and len(bounds) == 2 and np.ndim(bounds[0]) == 1:
        lower = check_array(np.asarray(bounds[0], dtype=float).reshape(1, -1))[0]
        upper = check_array(np.asarray(bounds[1], dtype=float).reshape(1, -1))[0]
    else:
        arr = check_array(bounds, dtype=float)
        if arr.shape[1] != 2:
            raise ValueError(f"bounds must have shape (n_dims, 2), got {arr.shape}")
        lower, upper = arr[:, 0], arr[:, 1]
    return SearchSpace(tuple(lower.tolist()), tuple(upper.tolist()))


def check_objective(objective, weights=None, dim=None) -> WeightedObjective:
    """Wrap one callable, or several with weights, so each receives an ndarray."""
    if isinstance(objective, WeightedObjective):
        return objective
    components = list(objective) if isinstance(objective, (list, tuple)) else [objective]
    for k, f in enumerate(components):
        if not callable(f):
            raise TypeError(f"objective component {k} is not callable")
    wrapped = [_as_array_input(f) for f in components]
    return WeightedObjective(wrapped, weights, dim=dim)


def _as_array_input(f):
    def call(point):
        return f(np.asarray(point, dtype=float))

    return call


def check_seed(random_state) -> int:
    """Unsigned 64-bit seed from ``None``, an int, or a numpy random state."""
    if random_state is None:
        return secrets.randbits(64)
    if isinstance(random_state, numbers.Integral) and not isinstance(random_state, bool):
        seed = int(random_state)
        if not 0 <= seed < 2 ** 64:
            raise ValueError(f"random_state must lie in [0, 2**64), got {seed}")
        return seed
    rs = check_random_state(random_state)
    return int(rs.randint(0, 2 ** 31 - 1))
