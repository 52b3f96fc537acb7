"""
Alternating renewal contact process of one user pair.

Contact sojourns are exponential with rate lambda_c, inter-contact sojourns
exponential with rate lambda_i.
"""
import math
from typing import Optional

import numpy as np

from models.errors import DomainError
from models.mobility_model import ContactTimeline, NetworkMobility, PairParams


def stationary_contact_prob(p: PairParams) -> float:
    """Long-run probability that the pair is in contact: lambda_i / (lambda_c + lambda_i)."""
    return p.lambda_i / p.total_rate


def stationary_idle_prob(p: PairParams) -> float:
    return p.lambda_c / p.total_rate


def conditional_idle_prob(p: PairParams, dt: float) -> float:
    """
    Probability the pair is out of contact dt seconds after an instant it was out of contact.

    Args:
        p: Pair rates
        dt: Lag in seconds, >= 0

    Returns:
        lambda_c/(lambda_c+lambda_i) + lambda_i/(lambda_c+lambda_i) * exp(-(lambda_c+lambda_i) dt)
    """
    if dt < 0.0:
        raise DomainError(f"lag must be non-negative, got {dt}")
    return stationary_idle_prob(p) + stationary_contact_prob(p) * math.exp(-p.total_rate * dt)


def scale_speed(p: PairParams, s: float) -> PairParams:
    """Both rates multiplied by the speed factor s."""
    if not (math.isfinite(s) and s > 0.0):
        raise DomainError(f"speed factor must be a finite positive number, got {s}")
    return PairParams(lambda_c=s * p.lambda_c, lambda_i=s * p.lambda_i)


def scale_network(net: NetworkMobility, s: float) -> NetworkMobility:
    """Every pair of the network sped up by the factor s."""
    return NetworkMobility(
        n_users=net.n_users,
        pair_params={key: scale_speed(p, s) for key, p in net.pair_params.items()},
    )


def sample_timeline(
    p: PairParams,
    horizon: float,
    rng: np.random.Generator,
    initially_in_contact: Optional[bool] = None,
) -> ContactTimeline:
    """
    Sample a stationary timeline covering [0, horizon].

    The initial state is drawn from the stationary law unless forced. By
    memorylessness the residual first sojourn is a full exponential, so no
    warm-up is needed.

    Args:
        p: Pair rates
        horizon: Seconds to cover, > 0
        rng: Random stream owned by the caller
        initially_in_contact: Force the initial state instead of drawing it

    Returns:
        ContactTimeline whose sojourns sum to at least the horizon
    """
    if not (math.isfinite(horizon) and horizon > 0.0):
        raise DomainError(f"horizon must be a finite positive number, got {horizon}")
    if initially_in_contact is None:
        initially_in_contact = bool(rng.random() < stationary_contact_prob(p))

    contact_mean = 1.0 / p.lambda_c
    idle_mean = 1.0 / p.lambda_i
    in_contact = initially_in_contact
    durations = []
    covered = 0.0
    while covered < horizon:
        duration = rng.exponential(contact_mean if in_contact else idle_mean)
        if duration <= 0.0:
            continue
        durations.append(float(duration))
        covered += duration
        in_contact = not in_contact
    if math.fsum(durations) < horizon:
        # Running float sum overshot the exact one; pad the last sojourn.
        durations[-1] += horizon - math.fsum(durations)
    return ContactTimeline(
        initially_in_contact=initially_in_contact,
        durations=tuple(durations),
        horizon=horizon,
    )
