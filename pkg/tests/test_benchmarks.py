import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from iwso.benchmarks import (
    FUNCTIONS,
    evaluate,
    foxholes,
    function_spec,
    make_objective,
    resolve_id,
    search_space,
    unambiguous_ids,
)
from iwso.space import RandomSource

from _table1 import MODALITY, SEPARABILITY, TABLE


@pytest.mark.parametrize("row", TABLE, ids=[r[0] for r in TABLE])
def test_registry_row(row):
    fid, name, mod, sep, lo, hi, dim = row
    spec = function_spec(fid)
    assert (spec.id, spec.name, spec.default_dim) == (fid, name, dim)
    assert (spec.lower, spec.upper) == (lo, hi)
    assert spec.modality == MODALITY[mod]
    assert spec.separability == SEPARABILITY[sep]


def test_registry_complete():
    assert list(FUNCTIONS) == [f"f{i}" for i in range(1, 24)]
    assert len(unambiguous_ids()) == 16
    assert {s.id for s in FUNCTIONS.values() if s.fixed_dim} == {"f2", "f3", "f6", "f21"}


def test_named_entries():
    f1 = function_spec("f1")
    assert (f1.name, f1.lower, f1.upper, f1.default_dim) == ("ackley", -32.768, 32.768, 30)
    assert (f1.modality, f1.separability) == ("multimodal", "nonseparable")
    f18 = function_spec("f18")
    assert (f18.name, f18.lower, f18.upper, f18.default_dim) == ("schwefel", -500, 500, 30)
    f9 = function_spec("f9")
    assert (f9.name, f9.lower, f9.upper, f9.default_dim) == ("michalewicz", 0, math.pi, 10)


def test_lookup():
    assert resolve_id("3") == "f3"
    assert resolve_id("booth") == "f3"
    assert resolve_id("F20") == "f20"
    with pytest.raises(KeyError):
        function_spec("f24")
    with pytest.raises(KeyError):
        function_spec("nope")


def test_example_values():
    assert evaluate("f20", [0.0] * 30) == 0.0
    assert evaluate("f3", [1.0, 3.0]) == 0.0
    assert abs(evaluate("f1", [0.0] * 30)) <= 1e-9
    assert evaluate("f14", [1.0, 1.0]) == pytest.approx(2.0, abs=1e-12)
    assert evaluate("f20", [1.0, 1.0]) == 2.0


def test_literature_values():
    # Ackley at the all-ones point in 2-D: 20 (1 - exp(-0.2)).
    assert evaluate("f1", [1.0, 1.0]) == pytest.approx(20 * (1 - math.exp(-0.2)), abs=1e-12)
    # Michalewicz 2-D minimum is about -1.8013 at (2.2029, pi / 2).
    assert evaluate("f9", [2.202906, math.pi / 2]) == pytest.approx(-1.8013, abs=1e-4)
    assert evaluate("f7", [math.pi, 0.0]) == pytest.approx(
        1 + math.pi ** 2 / 4000 - math.cos(math.pi), abs=1e-12
    )
    assert evaluate("f16", [0.0, 0.0]) == 1.0
    assert evaluate("f23", [1.0, 1.0]) == pytest.approx(2 + 1.5 ** 2 + 1.5 ** 4)
    assert evaluate("f13", [0.5, 0.5]) == pytest.approx(0.25 + 0.125)
    assert evaluate("f21", [1.0, 1.0]) == pytest.approx(2 - 1.05 + 1 / 6 + 1 + 1)
    assert evaluate("f2", [0.0, 0.0]) == -200.0
    assert evaluate("f19", [math.pi / 2] * 30) == pytest.approx(-30.0)


@pytest.mark.parametrize("fid", [s.id for s in FUNCTIONS.values() if s.known_optimum()])
def test_known_optimum_coherent(fid):
    spec = function_spec(fid)
    for dim in ([spec.default_dim] if spec.fixed_dim else [2, 5, spec.default_dim]):
        point, value = spec.known_optimum(dim)
        assert len(point) == dim
        assert abs(evaluate(fid, point) - value) <= 1e-9


def test_foxholes_optimum_is_stationary():
    point, value = function_spec("f6").known_optimum()
    h = 1e-6
    for dx, dy in ((h, 0), (-h, 0), (0, h), (0, -h)):
        assert foxholes((point[0] + dx, point[1] + dy)) >= value - 1e-15


def test_schwefel_optimum_is_stationary():
    x = function_spec("f18").known_optimum(1)[0][0]
    r = math.sqrt(x)
    # d/dx x sin(sqrt x) = sin r + r cos(r) / 2.
    assert abs(math.sin(r) + r * math.cos(r) / 2) < 1e-12


def test_fixed_dimension_enforced():
    for fid in ("f2", "f3", "f6", "f21"):
        with pytest.raises(ValueError):
            evaluate(fid, [0.0, 0.0, 0.0])
        with pytest.raises(ValueError):
            search_space(fid, 3)
    with pytest.raises(ValueError):
        evaluate("f16", [1.0])
    with pytest.raises(ValueError):
        evaluate("f20", [])


def test_noisy_functions_use_caller_rng():
    with pytest.raises(ValueError):
        evaluate("f12", [0.0] * 3)
    a = evaluate("f12", [1.0] * 3, RandomSource(4))
    b = evaluate("f12", [1.0] * 3, RandomSource(4))
    assert a == b
    assert 3.0 <= a < 4.0
    obj = make_objective("f11", dim=2, rng=RandomSource(1))
    assert obj((0.0, 0.0)) != obj((0.0, 0.0))


def test_accepts_numpy_input():
    assert evaluate("f20", np.ones(4)) == 4.0


@pytest.mark.parametrize("fid", [s.id for s in FUNCTIONS.values() if not s.noisy])
def test_deterministic_and_finite_on_box(fid):
    space = search_space(fid)
    rng = RandomSource(7)
    for _ in range(20):
        x = [lo + rng.uniform() * (hi - lo) for lo, hi in zip(space.lower, space.upper)]
        v = evaluate(fid, x)
        assert math.isfinite(v)
        assert evaluate(fid, x) == v
    assert math.isfinite(evaluate(fid, space.lower))
    assert math.isfinite(evaluate(fid, space.upper))


vectors = st.lists(st.floats(-5, 5, allow_nan=False), min_size=1, max_size=8)


@given(vectors)
def test_symmetry(x):
    neg = [-v for v in x]
    assert evaluate("f20", x) == evaluate("f20", neg)
    assert evaluate("f14", x) == evaluate("f14", neg)
