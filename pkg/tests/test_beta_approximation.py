"""
Tests for beta moment matching and the per-request offload ratio.
"""
import numpy as np
import pytest
from scipy import integrate as sp_integrate
from scipy import special

from analytics.beta_approximation import (
    beta_match,
    is_degenerate,
    offload_ratio_by_quadrature,
    offload_ratio_from_beta,
    per_request_offload_ratio,
)
from models.errors import DomainError
from models.system_model import BetaParams, CommTimeMoments

DEADLINE = 300.0


def moments_of(beta: BetaParams, deadline: float = DEADLINE) -> CommTimeMoments:
    return CommTimeMoments(
        mean=deadline * beta.mean(), variance=deadline ** 2 * beta.variance(), deadline=deadline
    )


def test_symmetric_match():
    matched = beta_match(CommTimeMoments(mean=150.0, variance=4500.0, deadline=DEADLINE))
    assert matched.alpha == pytest.approx(2.0, rel=1e-12)
    assert matched.beta == pytest.approx(2.0, rel=1e-12)


def test_match_recovers_shapes(rng):
    for _ in range(50):
        alpha, beta = rng.uniform(0.1, 50.0, size=2)
        matched = beta_match(moments_of(BetaParams(alpha=alpha, beta=beta)))
        assert matched.alpha == pytest.approx(alpha, rel=1e-9)
        assert matched.beta == pytest.approx(beta, rel=1e-9)


@pytest.mark.parametrize(
    "mean,variance",
    [(0.0, 0.0), (300.0, 0.0), (150.0, 0.0), (150.0, 150.0 * 150.0)],
)
def test_match_rejects_moments_without_beta_law(mean, variance):
    with pytest.raises(DomainError):
        beta_match(CommTimeMoments(mean=mean, variance=variance, deadline=DEADLINE))


def test_known_ratios():
    assert offload_ratio_from_beta(BetaParams(alpha=2.0, beta=2.0), 0.5) == pytest.approx(0.8125, abs=1e-10)
    assert offload_ratio_from_beta(BetaParams(alpha=1.0, beta=1.0), 0.5) == pytest.approx(0.75, abs=1e-10)


def test_size_ratio_domain():
    for r in (0.0, 1.0, 1.5):
        with pytest.raises(DomainError):
            offload_ratio_from_beta(BetaParams(alpha=2.0, beta=2.0), r)


def test_closed_form_matches_quadrature_grid():
    rng = np.random.default_rng(8)
    ratios = np.round(np.arange(0.1, 1.0, 0.1), 1)
    for k in range(100):
        alpha, beta = rng.uniform(0.1, 50.0, size=2)
        r = float(ratios[k % ratios.size])
        params = BetaParams(alpha=alpha, beta=beta)
        closed = offload_ratio_from_beta(params, r)
        assert closed == pytest.approx(offload_ratio_by_quadrature(params, r), abs=1e-6)


def test_closed_form_matches_scipy():
    rng = np.random.default_rng(9)
    for _ in range(30):
        alpha, beta = rng.uniform(0.1, 50.0, size=2)
        r = float(rng.uniform(0.1, 0.9))
        reference, _ = sp_integrate.quad(
            lambda t: 1.0 - special.betainc(alpha, beta, r * t), 0.0, 1.0, epsabs=1e-12, limit=200
        )
        assert offload_ratio_from_beta(BetaParams(alpha=alpha, beta=beta), r) == pytest.approx(reference, abs=1e-6)


def test_per_request_uses_beta_law(system):
    moments = CommTimeMoments(mean=150.0, variance=4500.0, deadline=DEADLINE)
    assert per_request_offload_ratio(moments, system) == pytest.approx(0.8125, abs=1e-10)


def test_per_request_rejects_other_deadline(system):
    with pytest.raises(DomainError):
        per_request_offload_ratio(CommTimeMoments(mean=50.0, variance=100.0, deadline=200.0), system)


@pytest.mark.parametrize("mean,expected", [(0.0, 0.0), (100.0, 2.0 / 3.0), (200.0, 1.0), (300.0, 1.0)])
def test_degenerate_moments_use_mean(system, mean, expected):
    moments = CommTimeMoments(mean=mean, variance=0.0, deadline=DEADLINE)
    assert is_degenerate(moments)
    assert per_request_offload_ratio(moments, system) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("mean_fraction", [0.1, 0.5, 0.9])
@pytest.mark.parametrize("size_ratio", [0.2, 0.5, 0.8])
def test_ratio_increases_with_alpha_at_fixed_mean(mean_fraction, size_ratio):
    values = []
    for alpha in (0.1, 0.2, 0.5, 1.0, 2.0):
        beta = alpha * (1.0 - mean_fraction) / mean_fraction
        values.append(offload_ratio_from_beta(BetaParams(alpha=alpha, beta=beta), size_ratio))
    assert all(later > earlier for earlier, later in zip(values, values[1:]))
