"""
Tests for the adaptive Gauss-Legendre quadrature.
"""
import math

import numpy as np
import pytest

from models.errors import ConvergenceError, DomainError
from numerics.quadrature import integrate


def test_sine_over_half_period():
    result = integrate(np.sin, 0.0, math.pi)
    assert result.value == pytest.approx(2.0, abs=1e-12)
    assert result.error_estimate >= 0.0
    assert result.evaluations >= 1


def test_polynomial_is_exact():
    result = integrate(lambda x: 3.0 * x ** 2 - 2.0 * x + 1.0, -1.0, 2.0)
    assert result.value == pytest.approx(9.0, rel=1e-14)


def test_constant_integrand_is_broadcast():
    assert integrate(lambda x: 2.5, 1.0, 3.0).value == pytest.approx(5.0, rel=1e-14)


def test_sharp_peak_is_refined():
    width = 0.02
    result = integrate(lambda x: np.exp(-((x - 0.37) / width) ** 2), 0.0, 1.0, abs_tol=1e-13)
    assert result.value == pytest.approx(width * math.sqrt(math.pi), rel=1e-9)
    assert result.evaluations > 30


def test_endpoint_singularity():
    # int_0^1 x^-1/2 dx = 2; integrable singularity, nodes never touch 0
    result = integrate(lambda x: 1.0 / np.sqrt(x), 0.0, 1.0, abs_tol=1e-8)
    assert result.value == pytest.approx(2.0, abs=1e-7)


def test_relative_tolerance():
    result = integrate(np.exp, 0.0, 20.0, abs_tol=1e-300, rel_tol=1e-12)
    assert result.value == pytest.approx(math.expm1(20.0), rel=1e-11)


def test_ramp_against_closed_form():
    b, deadline = 0.0036, 300.0
    result = integrate(lambda u: 2.0 * (deadline - u) * np.exp(-b * u), 0.0, deadline, abs_tol=1e-10)
    expected = 2.0 * (b * deadline - 1.0 + math.exp(-b * deadline)) / b ** 2
    assert result.value == pytest.approx(expected, rel=1e-12)


def test_empty_interval():
    result = integrate(np.cos, 1.5, 1.5)
    assert result.value == 0.0
    assert result.error_estimate == 0.0
    assert result.evaluations == 1


@pytest.mark.parametrize("lo,hi", [(1.0, 0.0), (0.0, float("inf")), (float("-inf"), 0.0)])
def test_invalid_limits(lo, hi):
    with pytest.raises(DomainError):
        integrate(np.cos, lo, hi)


def test_non_finite_integrand():
    with pytest.raises(DomainError):
        integrate(lambda x: np.where(x > 0.5, np.inf, 1.0), 0.0, 1.0)


def test_budget_exhaustion_raises():
    with pytest.raises(ConvergenceError):
        integrate(lambda x: np.where(x < 1.0 / 3.0, 0.0, 1.0), 0.0, 1.0, abs_tol=1e-14, max_evaluations=200)
