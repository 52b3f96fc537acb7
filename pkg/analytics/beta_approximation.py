"""
Beta approximation of the normalized communication time and the per-request offload ratio.

T^c is approximated by T^d * Y with Y ~ Beta(alpha, beta) matching the first
two moments. The delivered share of a file of size C is min(R T^c, C) / C,
so with r = C / (T^d R) the per-request ratio is E[min(Y / r, 1)].
"""
import logging

import numpy as np

from models.errors import DomainError
from models.system_model import BetaParams, CommTimeMoments, SystemParams
from numerics.quadrature import integrate
from numerics.special_functions import reg_inc_beta

logger = logging.getLogger(__name__)

# Variance at or below this share of mean*(T - mean) is treated as deterministic.
DEGENERATE_VARIANCE_RTOL = 1e-6


def beta_match(m: CommTimeMoments) -> BetaParams:
    """
    Beta parameters whose scaled law reproduces the mean and variance.

    alpha = mean^2 (T - mean) / (variance T) - mean / T
    beta  = alpha (T - mean) / mean

    Raises:
        DomainError: If the moments admit no beta law
    """
    mean, variance, deadline = m.mean, m.variance, m.deadline
    if not (0.0 < mean < deadline):
        raise DomainError(f"beta matching needs 0 < mean < deadline, got mean={mean}, deadline={deadline}")
    bound = mean * (deadline - mean)
    if not (0.0 < variance < bound):
        raise DomainError(
            f"variance {variance} is outside (0, mean*(deadline-mean) = {bound}); "
            "no beta law matches these moments"
        )
    spread = bound / variance - 1.0
    fraction = mean / deadline
    return BetaParams(alpha=fraction * spread, beta=(1.0 - fraction) * spread)


def offload_ratio_from_beta(beta: BetaParams, size_ratio: float) -> float:
    """
    E[min(Y / r, 1)] for Y ~ Beta(alpha, beta).

    Equals 1 - I_r(alpha, beta) + (alpha / (alpha + beta)) / r * I_r(alpha + 1, beta).
    """
    if not (0.0 < size_ratio < 1.0):
        raise DomainError(f"size ratio C/(T^d R) must lie in (0, 1), got {size_ratio}")
    a, b, r = beta.alpha, beta.beta, size_ratio
    value = 1.0 - reg_inc_beta(r, a, b) + beta.mean() / r * reg_inc_beta(r, a + 1.0, b)
    return min(1.0, max(0.0, value))


def offload_ratio_by_quadrature(beta: BetaParams, size_ratio: float, abs_tol: float = 1e-10) -> float:
    """
    E[min(Y / r, 1)] integrated directly as int_0^1 P(Y > r t) dt.
    """
    if not (0.0 < size_ratio < 1.0):
        raise DomainError(f"size ratio C/(T^d R) must lie in (0, 1), got {size_ratio}")
    survival = np.vectorize(lambda t: 1.0 - reg_inc_beta(size_ratio * t, beta.alpha, beta.beta))
    return integrate(survival, 0.0, 1.0, abs_tol=abs_tol).value


def is_degenerate(m: CommTimeMoments) -> bool:
    """True when the beta law collapses onto the mean."""
    if m.mean <= 0.0 or m.mean >= m.deadline:
        return True
    return m.variance <= DEGENERATE_VARIANCE_RTOL * m.mean * (m.deadline - m.mean)


def per_request_offload_ratio(m: CommTimeMoments, system: SystemParams) -> float:
    """
    Expected share of a requested file delivered over D2D links.

    Args:
        m: Communication-time moments of the request
        system: File size, rate and deadline

    Returns:
        Offload ratio in [0, 1]
    """
    if not np.isclose(m.deadline, system.deadline, rtol=1e-12, atol=0.0):
        raise DomainError(f"moments use deadline {m.deadline}, system uses {system.deadline}")
    if is_degenerate(m):
        logger.debug("Degenerate communication time (mean=%g, variance=%g), using its mean", m.mean, m.variance)
        return min(m.mean * system.rate, system.file_size) / system.file_size
    return offload_ratio_from_beta(beta_match(m), system.size_ratio)
