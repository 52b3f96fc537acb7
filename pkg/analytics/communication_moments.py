"""
Mean and variance of the communication time T^c of one request.

A request from user i for file f is served by the holders j != i caching f.
Pair processes are stationary and independent, so the window-average of the
joint idle probability gives the mean, and the lag-integral of the joint
idle correlation gives the variance.
"""
import logging
import math
from typing import Sequence

import numpy as np

from models.errors import DomainError
from models.mobility_model import PairParams
from models.system_model import CommTimeMoments
from numerics.quadrature import integrate

logger = logging.getLogger(__name__)

_VARIANCE_RTOL = 1e-11
# Below this b*T the ramp integral switches to its Taylor series.
_SERIES_CUTOFF = 1e-3


def _check_deadline(deadline: float) -> None:
    if not (math.isfinite(deadline) and deadline > 0.0):
        raise DomainError(f"deadline must be a finite positive number, got {deadline}")


def _log_idle_product(holders: Sequence[PairParams]) -> float:
    """log of prod_j lambda_c/(lambda_c+lambda_i), the chance no holder is in contact."""
    return -math.fsum(math.log1p(p.lambda_i / p.lambda_c) for p in holders)


def comm_time_mean(holders: Sequence[PairParams], deadline: float) -> float:
    """
    E[T^c] = T^d * (1 - prod_j lambda_c/(lambda_c+lambda_i)).

    Args:
        holders: Pair rates between the requester and every holder
        deadline: Window length T^d in seconds

    Returns:
        Mean communication time in [0, deadline]; 0 without holders
    """
    _check_deadline(deadline)
    if not holders:
        return 0.0
    return deadline * -math.expm1(_log_idle_product(holders))


def comm_time_variance(holders: Sequence[PairParams], deadline: float) -> float:
    """
    Var[T^c] by quadrature of the lag integral.

    Evaluates 2 * int_0^T (T - u) [G(u) - Q^2] du, where
    G(u) = prod_j q_j (q_j + p_j e^{-a_j u}) is the probability no holder is
    in contact at two instants u apart and Q = prod_j q_j. Subtracting Q^2
    inside the integral equals subtracting (T Q)^2 outside it.

    Args:
        holders: Pair rates between the requester and every holder
        deadline: Window length T^d in seconds

    Returns:
        Variance in seconds squared; 0 without holders

    Raises:
        ConvergenceError: If the quadrature does not converge
    """
    _check_deadline(deadline)
    if not holders:
        return 0.0
    odds = np.array([p.lambda_i / p.lambda_c for p in holders])
    rates = np.array([p.total_rate for p in holders])
    q_squared = math.exp(2.0 * _log_idle_product(holders))

    def excess_joint_idle(u: np.ndarray) -> np.ndarray:
        log_ratio = np.log1p(odds[:, None] * np.exp(-rates[:, None] * u[None, :])).sum(axis=0)
        return (deadline - u) * np.expm1(log_ratio)

    result = integrate(
        excess_joint_idle,
        0.0,
        deadline,
        abs_tol=np.finfo(float).tiny,
        rel_tol=_VARIANCE_RTOL,
    )
    return max(0.0, 2.0 * q_squared * result.value)


def _ramp_integral(b: float, deadline: float) -> float:
    """2 * int_0^T (T - u) e^{-b u} du = 2 (bT - 1 + e^{-bT}) / b^2."""
    x = b * deadline
    if x < _SERIES_CUTOFF:
        # (x - 1 + e^-x) = x^2/2 - x^3/6 + x^4/24 - ...
        return deadline * deadline * (1.0 - x / 3.0 + x * x / 12.0 - x ** 3 / 60.0)
    return 2.0 * (x + math.expm1(-x)) / (b * b)


def _binomial_variance(lambda_c: float, lambda_i: float, n_f: int, deadline: float, copies: float) -> float:
    total = lambda_c + lambda_i
    log_q = math.log(lambda_c / total)
    log_p = math.log(lambda_i / total)
    terms = []
    for l in range(1, n_f + 1):
        log_weight = math.log(math.comb(n_f, l)) + (2 * n_f - l) * log_q + l * log_p
        terms.append(math.exp(log_weight) * copies * 0.5 * _ramp_integral(l * total, deadline))
    return math.fsum(terms)


def comm_time_variance_hom_printed(lambda_c: float, lambda_i: float, n_f: int, deadline: float) -> float:
    """
    Binomial variance with a single copy of each ramp term.

    Half of comm_time_variance_hom's value; kept to compare against the oracles.
    """
    return _binomial_variance(lambda_c, lambda_i, n_f, deadline, copies=1.0)


def comm_time_moments_hom(lambda_c: float, lambda_i: float, n_f: int, deadline: float) -> CommTimeMoments:
    """
    Closed-form moments when all n_f holders share (lambda_c, lambda_i).

    mean = T [1 - q^{n_f}] and
    var = sum_{l=1}^{n_f} C(n_f, l) q^{2 n_f - l} p^l * 2 int_0^T (T - u) e^{-l a u} du
    with q = lambda_c/a, p = lambda_i/a, a = lambda_c + lambda_i.

    Args:
        lambda_c: Contact rate
        lambda_i: Inter-contact rate
        n_f: Number of holders, >= 1
        deadline: Window length T^d

    Returns:
        CommTimeMoments of the request
    """
    _check_deadline(deadline)
    if n_f < 1:
        raise DomainError(f"closed-form moments need at least one holder, got n_f={n_f}")
    if not (lambda_c > 0.0 and lambda_i > 0.0):
        raise DomainError(f"rates must be positive, got lambda_c={lambda_c}, lambda_i={lambda_i}")
    mean = deadline * -math.expm1(-n_f * math.log1p(lambda_i / lambda_c))
    variance = _binomial_variance(lambda_c, lambda_i, n_f, deadline, copies=2.0)
    return _bounded_moments(mean, variance, deadline)


def _bounded_moments(mean: float, variance: float, deadline: float) -> CommTimeMoments:
    mean = min(max(mean, 0.0), deadline)
    variance = min(max(variance, 0.0), mean * (deadline - mean))
    return CommTimeMoments(mean=mean, variance=variance, deadline=deadline)


def comm_time_moments(holders: Sequence[PairParams], deadline: float) -> CommTimeMoments:
    """
    Moments of T^c for an arbitrary holder set.

    Identical holders take the closed form, others the quadrature.
    """
    _check_deadline(deadline)
    if not holders:
        return CommTimeMoments(mean=0.0, variance=0.0, deadline=deadline)
    first = holders[0]
    if all(p == first for p in holders):
        return comm_time_moments_hom(first.lambda_c, first.lambda_i, len(holders), deadline)
    return _bounded_moments(comm_time_mean(holders, deadline), comm_time_variance(holders, deadline), deadline)
