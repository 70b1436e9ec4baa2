"""The 23-function benchmark suite, f1 to f23.

Formulas follow the usual literature conventions. Seven entries (ackley_2,
cosine matrix, multimodal sphere, noisy quadratic, noisy sphere, rastrigin_2,
sine wave) have no single agreed definition; they are flagged ``ambiguous``
and their docstrings state the form chosen here.

Every function accepts any sequence of floats and returns a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .space import RandomSource, SearchSpace, WeightedObjective

__all__ = [
    "FUNCTIONS",
    "FunctionSpec",
    "evaluate",
    "function_spec",
    "make_objective",
    "resolve_id",
    "search_space",
    "unambiguous_ids",
]

PI = math.pi
TWO_PI = 2.0 * math.pi


def ackley(x):
    """-20 exp(-0.2 sqrt(mean x^2)) - exp(mean cos 2 pi x) + 20 + e."""
    d = len(x)
    sq = math.fsum(v * v for v in x) / d
    cs = math.fsum(math.cos(TWO_PI * v) for v in x) / d
    return -20.0 * math.exp(-0.2 * math.sqrt(sq)) - math.exp(cs) + 20.0 + math.e


def ackley_2(x):
    """Ackley N.2 (ambiguous): -200 exp(-0.02 sqrt(x^2 + y^2))."""
    x1, x2 = x
    return -200.0 * math.exp(-0.02 * math.sqrt(x1 * x1 + x2 * x2))


def booth(x):
    x1, x2 = x
    return (x1 + 2.0 * x2 - 7.0) ** 2 + (2.0 * x1 + x2 - 5.0) ** 2


def cosine_mixture(x):
    """Cosine matrix (ambiguous): -0.1 sum cos(5 pi x) + sum x^2."""
    return math.fsum(v * v - 0.1 * math.cos(5.0 * PI * v) for v in x)


def dixon_price(x):
    total = (x[0] - 1.0) ** 2
    for i in range(1, len(x)):
        total += (i + 1) * (2.0 * x[i] * x[i] - x[i - 1]) ** 2
    return total


_FOXHOLE_GRID = (-32.0, -16.0, 0.0, 16.0, 32.0)
_FOXHOLES = tuple((a, b) for b in _FOXHOLE_GRID for a in _FOXHOLE_GRID)


def foxholes(x):
    """Shekel's foxholes (De Jong F5)."""
    x1, x2 = x
    inner = math.fsum(
        1.0 / (j + (x1 - a) ** 6 + (x2 - b) ** 6)
        for j, (a, b) in enumerate(_FOXHOLES, start=1)
    )
    return 1.0 / (1.0 / 500.0 + inner)


def griewank(x):
    s = math.fsum(v * v for v in x) / 4000.0
    p = 1.0
    for i, v in enumerate(x, start=1):
        p *= math.cos(v / math.sqrt(i))
    return 1.0 + s - p


def levy(x):
    w = [1.0 + (v - 1.0) / 4.0 for v in x]
    total = math.sin(PI * w[0]) ** 2
    for wi in w[:-1]:
        total += (wi - 1.0) ** 2 * (1.0 + 10.0 * math.sin(PI * wi + 1.0) ** 2)
    wd = w[-1]
    total += (wd - 1.0) ** 2 * (1.0 + math.sin(TWO_PI * wd) ** 2)
    return total


def michalewicz(x, m=10):
    return -math.fsum(
        math.sin(v) * math.sin(i * v * v / PI) ** (2 * m) for i, v in enumerate(x, start=1)
    )


def multimodal_sphere(x):
    """Multimodal sphere (ambiguous): sum x^2 - 10 sum cos(2 pi x)."""
    return math.fsum(v * v - 10.0 * math.cos(TWO_PI * v) for v in x)


def noisy_quadratic(x, rng: RandomSource):
    """Noisy quadratic (ambiguous): sum x^4 plus U[0, 1) noise."""
    return math.fsum(v ** 4 for v in x) + rng.uniform()


def noisy_sphere(x, rng: RandomSource):
    """Noisy sphere (ambiguous): sum x^2 plus U[0, 1) noise."""
    return math.fsum(v * v for v in x) + rng.uniform()


def powell_sum(x):
    return math.fsum(abs(v) ** (i + 1) for i, v in enumerate(x, start=1))


def rastrigin(x):
    return 10.0 * len(x) + math.fsum(v * v - 10.0 * math.cos(TWO_PI * v) for v in x)


def rosenbrock(x):
    return math.fsum(
        100.0 * (x[i + 1] - x[i] * x[i]) ** 2 + (1.0 - x[i]) ** 2 for i in range(len(x) - 1)
    )


def salomon(x):
    r = math.sqrt(math.fsum(v * v for v in x))
    return 1.0 - math.cos(TWO_PI * r) + 0.1 * r


def schwefel(x):
    """418.9829 D - sum x sin(sqrt|x|)."""
    return 418.9829 * len(x) - math.fsum(v * math.sin(math.sqrt(abs(v))) for v in x)


def sine_wave(x):
    """Sine wave (ambiguous): -sum sin(x)."""
    return -math.fsum(math.sin(v) for v in x)


def sphere(x):
    return math.fsum(v * v for v in x)


def three_hump_camel(x):
    x1, x2 = x
    return 2.0 * x1 ** 2 - 1.05 * x1 ** 4 + x1 ** 6 / 6.0 + x1 * x2 + x2 ** 2


def xin_she_yang_4(x):
    a = math.fsum(math.sin(v) ** 2 for v in x)
    b = math.exp(-math.fsum(v * v for v in x))
    c = math.exp(-math.fsum(math.sin(math.sqrt(abs(v))) ** 2 for v in x))
    return (a - b) * c


def zakharov(x):
    s1 = math.fsum(v * v for v in x)
    s2 = math.fsum(0.5 * i * v for i, v in enumerate(x, start=1))
    return s1 + s2 ** 2 + s2 ** 4


@dataclass(frozen=True)
class FunctionSpec:
    """Registry entry for one benchmark function."""

    id: str
    name: str
    func: Callable
    modality: str
    separability: str
    default_dim: int
    lower: float
    upper: float
    fixed_dim: bool = False
    noisy: bool = False
    ambiguous: bool = False
    optimum_point: Optional[Callable[[int], tuple]] = None
    optimum_value: Optional[Callable[[int], float]] = None

    @property
    def number(self) -> int:
        return int(self.id[1:])

    def known_optimum(self, dim: Optional[int] = None):
        """``(point, value)`` at ``dim`` (default dimension if omitted), or None."""
        if self.optimum_point is None:
            return None
        dim = self.default_dim if dim is None else dim
        return self.optimum_point(dim), self.optimum_value(dim)


def _zeros(d):
    return (0.0,) * d


def _ones(d):
    return (1.0,) * d


def _const(v):
    return lambda d: v


def _dixon_price_point(d):
    return tuple(2.0 ** (-(2.0 ** i - 2.0) / 2.0 ** i) for i in range(1, d + 1))


# Foxholes minimum: stationary point solved to 40 digits, not a closed form.
_FOXHOLES_POINT = (-31.978334835656970, -31.978334837300795)
_FOXHOLES_VALUE = 0.99800383779445026
# Stationary point of x sin(sqrt x) on (0, 500]; the 418.9829 constant rounds
# the matching maximum, so the optimum value is slightly positive.
_SCHWEFEL_X = 420.96874635998203
_SCHWEFEL_PER_DIM = 418.9829 - 418.98288727243371


def _spec(id, name, func, modality, sep, dim, lower, upper, **kw):
    return FunctionSpec(id, name, func, modality, sep, dim, lower, upper, **kw)


U, M, S, N = "unimodal", "multimodal", "separable", "nonseparable"

FUNCTIONS = {
    s.id: s
    for s in (
        _spec("f1", "ackley", ackley, M, N, 30, -32.768, 32.768,
              optimum_point=_zeros, optimum_value=_const(0.0)),
        _spec("f2", "ackley_2", ackley_2, M, N, 2, -32.768, 32.768, fixed_dim=True,
              ambiguous=True, optimum_point=_zeros, optimum_value=_const(-200.0)),
        _spec("f3", "booth", booth, U, N, 2, -10.0, 10.0, fixed_dim=True,
              optimum_point=lambda d: (1.0, 3.0), optimum_value=_const(0.0)),
        _spec("f4", "cosine matrix", cosine_mixture, M, N, 30, -10.0, 10.0,
              ambiguous=True, optimum_point=_zeros, optimum_value=lambda d: -0.1 * d),
        _spec("f5", "dixon-price", dixon_price, U, N, 30, -10.0, 10.0,
              optimum_point=_dixon_price_point, optimum_value=_const(0.0)),
        _spec("f6", "foxholes", foxholes, M, N, 2, -65.536, 65.536, fixed_dim=True,
              optimum_point=lambda d: _FOXHOLES_POINT, optimum_value=_const(_FOXHOLES_VALUE)),
        _spec("f7", "griewank", griewank, M, N, 30, -600.0, 600.0,
              optimum_point=_zeros, optimum_value=_const(0.0)),
        _spec("f8", "levy", levy, M, N, 30, -10.0, 10.0,
              optimum_point=_ones, optimum_value=_const(0.0)),
        _spec("f9", "michalewicz", michalewicz, M, N, 10, 0.0, PI),
        _spec("f10", "multimodal sphere", multimodal_sphere, M, S, 30, -10.0, 10.0,
              ambiguous=True, optimum_point=_zeros, optimum_value=lambda d: -10.0 * d),
        _spec("f11", "noisy quadratic", noisy_quadratic, U, S, 30, -10.0, 10.0,
              noisy=True, ambiguous=True),
        _spec("f12", "noisy sphere", noisy_sphere, U, S, 30, -10.0, 10.0,
              noisy=True, ambiguous=True),
        _spec("f13", "powell sum", powell_sum, U, S, 30, -1.0, 1.0,
              optimum_point=_zeros, optimum_value=_const(0.0)),
        _spec("f14", "rastrigin", rastrigin, M, S, 30, -5.12, 5.12,
              optimum_point=_zeros, optimum_value=_const(0.0)),
        _spec("f15", "rastrigin_2", rastrigin, M, S, 30, -5.12, 5.12,
              ambiguous=True, optimum_point=_zeros, optimum_value=_const(0.0)),
        _spec("f16", "rosenbrock", rosenbrock, U, N, 30, -5.0, 10.0,
              optimum_point=_ones, optimum_value=_const(0.0)),
        _spec("f17", "salomon", salomon, M, S, 30, -100.0, 100.0,
              optimum_point=_zeros, optimum_value=_const(0.0)),
        _spec("f18", "schwefel", schwefel, M, S, 30, -500.0, 500.0,
              optimum_point=lambda d: (_SCHWEFEL_X,) * d,
              optimum_value=lambda d: _SCHWEFEL_PER_DIM * d),
        _spec("f19", "sine wave", sine_wave, M, S, 30, -PI, PI, ambiguous=True,
              optimum_point=lambda d: (PI / 2.0,) * d, optimum_value=lambda d: -float(d)),
        _spec("f20", "sphere", sphere, U, S, 30, -5.12, 5.12,
              optimum_point=_zeros, optimum_value=_const(0.0)),
        _spec("f21", "three hump camel", three_hump_camel, U, N, 2, -5.0, 5.0,
              fixed_dim=True, optimum_point=_zeros, optimum_value=_const(0.0)),
        _spec("f22", "xin-she yang 4", xin_she_yang_4, M, N, 30, -10.0, 10.0,
              optimum_point=_zeros, optimum_value=_const(-1.0)),
        _spec("f23", "zakharov", zakharov, U, N, 30, -5.0, 10.0,
              optimum_point=_zeros, optimum_value=_const(0.0)),
    )
}

_BY_NAME = {s.name: s.id for s in FUNCTIONS.values()}
_BY_NAME.update({s.name.replace(" ", "_").replace("-", "_"): s.id for s in FUNCTIONS.values()})


def resolve_id(key: str) -> str:
    """Map ``"f3"``, ``"F3"``, ``"3"`` or ``"booth"`` to the canonical id."""
    k = str(key).strip().lower()
    if k in FUNCTIONS:
        return k
    if k.isdigit() and f"f{k}" in FUNCTIONS:
        return f"f{k}"
    if k in _BY_NAME:
        return _BY_NAME[k]
    raise KeyError(f"unknown benchmark function {key!r}")


def function_spec(key: str) -> FunctionSpec:
    return FUNCTIONS[resolve_id(key)]


def unambiguous_ids() -> list:
    return [s.id for s in FUNCTIONS.values() if not s.ambiguous]


def _check_point(spec: FunctionSpec, point: Sequence[float]) -> None:
    if len(point) < 1:
        raise ValueError("point must have at least one component")
    if spec.fixed_dim and len(point) != spec.default_dim:
        raise ValueError(
            f"{spec.name} is defined for dimension {spec.default_dim}, got {len(point)}"
        )
    if spec.func is rosenbrock and len(point) < 2:
        raise ValueError("rosenbrock needs at least two dimensions")


def evaluate(key: str, point: Sequence[float], rng: Optional[RandomSource] = None) -> float:
    """Value of benchmark ``key`` at ``point``.

    Noisy functions draw their noise from ``rng``, which is then required.
    """
    spec = function_spec(key)
    if hasattr(point, "tolist"):
        point = point.tolist()
    _check_point(spec, point)
    if spec.noisy:
        if rng is None:
            raise ValueError(f"{spec.name} is noisy and needs a RandomSource")
        return float(spec.func(point, rng))
    return float(spec.func(point))


def search_space(key: str, dim: Optional[int] = None) -> SearchSpace:
    spec = function_spec(key)
    if dim is None:
        dim = spec.default_dim
    if spec.fixed_dim and dim != spec.default_dim:
        raise ValueError(f"{spec.name} is defined for dimension {spec.default_dim}, got {dim}")
    return SearchSpace.uniform(spec.lower, spec.upper, dim)


def make_objective(
    key: str, dim: Optional[int] = None, rng: Optional[RandomSource] = None
) -> WeightedObjective:
    """Single-component objective for benchmark ``key``.

    Noisy functions are bound to ``rng`` so whole runs stay seed-deterministic.
    """
    spec = function_spec(key)
    dim = spec.default_dim if dim is None else dim
    if spec.fixed_dim and dim != spec.default_dim:
        raise ValueError(f"{spec.name} is defined for dimension {spec.default_dim}, got {dim}")
    if spec.noisy:
        if rng is None:
            raise ValueError(f"{spec.name} is noisy and needs a RandomSource")
        func = spec.func
        return WeightedObjective.single(lambda x: func(x, rng), dim=dim)
    return WeightedObjective.single(spec.func, dim=dim)
