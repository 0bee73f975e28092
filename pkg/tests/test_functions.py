"""Benchmark catalog contracts: optima, bounds, seeding, counting."""

import math

import numpy as np
import pytest

from apland.errors import BudgetError, ConfigurationError, DomainError
from apland.functions import (
    EvaluationCounter,
    catalog,
    error_value,
    evaluate,
    make_function,
)

ALL_NAMES = [name for name, _ in catalog()]


def test_catalog_has_the_required_difficulty_spread():
    assert set(ALL_NAMES) == {
        "sphere",
        "ellipsoid",
        "rosenbrock-rotated",
        "rastrigin",
        "rastrigin-rotated",
        "katsuura",
    }


@pytest.mark.parametrize("name", ALL_NAMES)
@pytest.mark.parametrize("d", [2, 7, 10])
def test_optimum_location_attains_optimum_value(name, d):
    func = make_function(name, d, seed=5)
    assert abs(func(func.optimum_location) - func.optimum_value) <= 1e-12


@pytest.mark.parametrize("name", ALL_NAMES)
def test_no_point_beats_the_optimum(name):
    func = make_function(name, 6, seed=9)
    rng = np.random.default_rng(123)
    pts = rng.uniform(-5, 5, (1000, 6))
    for x in pts:
        assert func(x) >= func.optimum_value - 1e-10


@pytest.mark.parametrize("name", ALL_NAMES)
def test_same_seed_same_function(name):
    a = make_function(name, 5, seed=42)
    b = make_function(name, 5, seed=42)
    assert np.array_equal(a.optimum_location, b.optimum_location)
    x = np.linspace(-3, 3, 5)
    assert a(x) == b(x)


def test_different_seeds_move_the_optimum():
    a = make_function("sphere", 5, seed=1)
    b = make_function("sphere", 5, seed=2)
    assert not np.array_equal(a.optimum_location, b.optimum_location)


def test_shift_stays_inside_the_domain():
    for seed in range(25):
        func = make_function("rosenbrock-rotated", 8, seed=seed)
        assert np.all(func.optimum_location >= -4.0)
        assert np.all(func.optimum_location <= 4.0)


def test_rotation_is_orthogonal():
    func = make_function("rastrigin-rotated", 9, seed=3)
    r = func.rotation
    assert np.max(np.abs(r.T @ r - np.eye(9))) < 1e-10


def test_identity_rotation_matches_separable_form():
    d = 6
    shift = np.zeros(d)
    rotated = make_function("rastrigin-rotated", d, 0, shift=shift, rotation=np.eye(d))
    plain = make_function("rastrigin", d, 0, shift=shift)
    rng = np.random.default_rng(7)
    for x in rng.uniform(-5, 5, (200, d)):
        assert rotated(x) == plain(x)


def test_rosenbrock_matches_textbook_form_on_the_rotated_point():
    d = 5
    func = make_function("rosenbrock-rotated", d, seed=11)
    rng = np.random.default_rng(8)
    for x in rng.uniform(-5, 5, (100, d)):
        z = func.rotation @ (x - func.optimum_location) + 1.0
        expected = sum(
            100.0 * (z[j] * z[j] - z[j + 1]) ** 2 + (z[j] - 1.0) ** 2
            for j in range(d - 1)
        )
        assert func(x) == pytest.approx(expected, rel=1e-12, abs=1e-9)


def test_ellipsoid_conditioning_spans_six_orders():
    func = make_function("ellipsoid", 10, seed=0)
    assert func.coeffs[0] == 1.0
    assert func.coeffs[-1] == pytest.approx(1e6, rel=1e-12)


def test_katsuura_matches_independent_vectorized_form():
    d = 4
    func = make_function("katsuura", d, seed=2)
    rng = np.random.default_rng(21)
    ks = 2.0 ** np.arange(1, 33)
    for x in rng.uniform(-5, 5, (50, d)):
        z = x - func.optimum_location
        inner = np.abs(ks[None, :] * z[:, None]
                       - np.floor(ks[None, :] * z[:, None] + 0.5)) / ks[None, :]
        factors = (1.0 + (np.arange(1, d + 1)) * inner.sum(axis=1)) ** (10.0 / d**1.2)
        expected = 10.0 / d**2 * np.prod(factors) - 10.0 / d**2
        assert func(x) == pytest.approx(expected, rel=1e-9)


def test_unknown_name_is_a_configuration_error():
    with pytest.raises(ConfigurationError):
        make_function("schwefel", 5, seed=0)


def test_low_dimension_is_a_domain_error():
    with pytest.raises(DomainError):
        make_function("sphere", 1, seed=0)


def test_counter_separates_counted_and_uncounted():
    func = make_function("sphere", 3, seed=0)
    counter = EvaluationCounter()
    x = np.zeros(3)
    evaluate(func, x, counter, counted=True)
    evaluate(func, x, counter, counted=True)
    evaluate(func, x, counter, counted=False)
    assert counter.counted == 2
    assert counter.uncounted == 1


def test_counter_enforces_the_budget():
    counter = EvaluationCounter(budget=2)
    counter.add_counted(2)
    with pytest.raises(BudgetError):
        counter.add_counted()
    counter.add_uncounted(100)  # uncounted is never capped
    assert counter.uncounted == 100


def test_error_value_floor():
    assert error_value(1e-9) == 0.0
    assert error_value(0.99e-8) == 0.0
    assert error_value(2e-8) == 2e-8
    assert error_value(-1e-12) == 0.0
    assert error_value(3.5, optimum=1.0) == 2.5


def test_evaluate_works_without_a_counter(sphere2):
    assert math.isfinite(evaluate(sphere2, np.zeros(2)))
