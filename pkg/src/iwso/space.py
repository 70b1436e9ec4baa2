"""Domain types shared by every optimizer in the package.

Positions travel through the optimizers as tuples of Python floats. The
public estimator layer converts to and from numpy arrays at the boundary.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Sequence

__all__ = [
    "Candidate",
    "EvaluationError",
    "RandomSource",
    "SearchSpace",
    "WeightedObjective",
    "clamp",
    "sample_uniform_point",
    "weighted_fitness",
]

WEIGHT_TOLERANCE = 1e-12
_UINT64 = (1 << 64) - 1


class EvaluationError(RuntimeError):
    """An objective returned a value the optimizers cannot rank.

    Attributes
    ----------
    component : int or None
        Index ``k`` of the offending component objective, when known.
    """

    def __init__(self, message: str, component: Optional[int] = None):
        super().__init__(message)
        self.component = component


@dataclass(frozen=True)
class SearchSpace:
    """Axis-aligned box ``[lower, upper]``."""

    lower: tuple
    upper: tuple

    def __post_init__(self):
        lower = tuple(float(v) for v in self.lower)
        upper = tuple(float(v) for v in self.upper)
        if len(lower) == 0:
            raise ValueError("search space needs at least one dimension")
        if len(lower) != len(upper):
            raise ValueError(
                f"lower and upper differ in length ({len(lower)} != {len(upper)})"
            )
        for j, (lo, hi) in enumerate(zip(lower, upper)):
            if not (math.isfinite(lo) and math.isfinite(hi)):
                raise ValueError(f"bounds of dimension {j} must be finite")
            if not lo < hi:
                raise ValueError(
                    f"lower[{j}]={lo} must be strictly below upper[{j}]={hi}"
                )
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def uniform(cls, lower: float, upper: float, dim: int) -> "SearchSpace":
        """Box with identical bounds in each of ``dim`` dimensions."""
        if dim < 1:
            raise ValueError(f"dim must be positive, got {dim}")
        return cls((lower,) * dim, (upper,) * dim)

    @property
    def dim(self) -> int:
        return len(self.lower)

    def contains(self, point: Sequence[float]) -> bool:
        return len(point) == self.dim and all(
            lo <= v <= hi for v, lo, hi in zip(point, self.lower, self.upper)
        )


class Candidate(NamedTuple):
    """A position and its cached objective value.

    ``fitness`` is NaN until the owning optimizer evaluates the position.
    """

    position: tuple
    fitness: float = math.nan


class RandomSource:
    """Seeded stream of the three draw primitives the optimizers use.

    Two sources built from the same seed produce identical sequences.
    Each run owns its source; never share one between threads.
    """

    def __init__(self, seed: int):
        seed = int(seed)
        if not 0 <= seed <= _UINT64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.seed = seed
        self._random = random.Random(seed)

    def derive(self, tag: int) -> "RandomSource":
        """Independent source for a side stream (e.g. objective noise)."""
        mixed = (self.seed * 0x9E3779B97F4A7C15 + int(tag) + 1) & _UINT64
        return RandomSource(mixed)

    def uniform(self) -> float:
        """One draw from U[0, 1)."""
        return self._random.random()

    def symmetric(self) -> float:
        """One draw from U[-1, 1]."""
        return 2.0 * self._random.random() - 1.0

    def normal(self) -> float:
        """One standard normal draw."""
        return self._random.gauss(0.0, 1.0)

    def uniform_vector(self, n: int) -> list:
        draw = self._random.random
        return [draw() for _ in range(n)]

    def symmetric_vector(self, n: int) -> list:
        draw = self._random.random
        return [2.0 * draw() - 1.0 for _ in range(n)]

    def normal_vector(self, n: int) -> list:
        gauss = self._random.gauss
        return [gauss(0.0, 1.0) for _ in range(n)]

    def integer(self, n: int) -> int:
        """Uniform integer in ``range(n)``."""
        return self._random.randrange(n)

    def sample_indices(self, n: int, k: int) -> list:
        """``k`` distinct indices from ``range(n)``."""
        return self._random.sample(range(n), k)


def clamp(point: Sequence[float], space: SearchSpace) -> tuple:
    """Project ``point`` component-wise onto the box of ``space``."""
    if len(point) != space.dim:
        raise ValueError(
            f"point has {len(point)} components, search space has {space.dim}"
        )
    return tuple(
        lo if v < lo else hi if v > hi else float(v)
        for v, lo, hi in zip(point, space.lower, space.upper)
    )


def sample_uniform_point(space: SearchSpace, rng: RandomSource) -> tuple:
    """``LB + u * (UB - LB)`` with one U[0, 1) draw per dimension."""
    u = rng.uniform_vector(space.dim)
    return tuple(
        lo + uj * (hi - lo) for uj, lo, hi in zip(u, space.lower, space.upper)
    )


class WeightedObjective:
    """Convex combination of scalar objectives, minimized as one.

    Parameters
    ----------
    components : sequence of callable
        Each maps a point (sequence of floats) to a float.
    weights : sequence of float, optional
        Nonnegative, summing to one. Defaults to equal weights.
    dim : int, optional
        Dimension the components expect, if they are fixed-dimension.
    """

    def __init__(
        self,
        components: Sequence[Callable[[Sequence[float]], float]],
        weights: Optional[Sequence[float]] = None,
        dim: Optional[int] = None,
    ):
        components = tuple(components)
        if not components:
            raise ValueError("at least one component objective is required")
        for k, f in enumerate(components):
            if not callable(f):
                raise TypeError(f"component {k} is not callable")
        if weights is None:
            weights = (1.0 / len(components),) * len(components)
        weights = tuple(float(w) for w in weights)
        if len(weights) != len(components):
            raise ValueError(
                f"{len(weights)} weights given for {len(components)} components"
            )
        if any(not w >= 0.0 for w in weights):
            raise ValueError("weights must be nonnegative")
        if abs(math.fsum(weights) - 1.0) > WEIGHT_TOLERANCE:
            raise ValueError(f"weights must sum to 1, got {math.fsum(weights)!r}")
        self.components = components
        self.weights = weights
        self.dim = dim

    @classmethod
    def single(cls, f: Callable, dim: Optional[int] = None) -> "WeightedObjective":
        return cls((f,), (1.0,), dim=dim)

    def __call__(self, point: Sequence[float]) -> float:
        return weighted_fitness(self, point)

    def __repr__(self):
        return f"WeightedObjective(K={len(self.components)}, weights={self.weights})"


def weighted_fitness(obj: WeightedObjective, point: Sequence[float]) -> float:
    """Return ``sum_k w_k * f_k(point)``.

    Raises
    ------
    EvaluationError
        If a component returns NaN or an infinity.
    """
    if len(obj.components) == 1 and obj.weights[0] == 1.0:
        value = float(obj.components[0](point))
        if not math.isfinite(value):
            raise EvaluationError(f"objective 0 returned {value!r}", component=0)
        return value
    total = 0.0
    for k, (f, w) in enumerate(zip(obj.components, obj.weights)):
        value = float(f(point))
        if not math.isfinite(value):
            raise EvaluationError(f"objective {k} returned {value!r}", component=k)
        total += w * value
    return total
