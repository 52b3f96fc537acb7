"""
Monte Carlo oracle for the communication time and the data offloading ratio.

Only the requester's pairs with holders are simulated in a trial; every
other pair is irrelevant to the communication time. Switching between
holders costs no time.
"""
import logging
from functools import partial
from typing import Optional, Sequence

import numpy as np

from analytics.offload_ratio import check_dimensions
from mobility.communication_time import union_communication_time
from mobility.contact_process import sample_timeline
from models.caching_model import Placement, RequestModel
from models.errors import DomainError
from models.estimate_model import CommTimeEstimate, McEstimate
from models.mobility_model import NetworkMobility, PairParams
from models.system_model import SystemParams
from montecarlo.trial_engine import run_trials, standard_error, variance_standard_error

logger = logging.getLogger(__name__)


def sample_comm_time(holders: Sequence[PairParams], deadline: float, rng: np.random.Generator) -> float:
    """One stationary-start draw of the communication time."""
    timelines = [sample_timeline(p, deadline, rng) for p in holders]
    return union_communication_time(timelines, deadline)


def simulate_request(
    net: NetworkMobility,
    placement: Placement,
    requester: int,
    file: int,
    system: SystemParams,
    rng: np.random.Generator,
) -> float:
    """
    Offloaded share of one request: min(R T^c, C) / C.

    Returns 1 when the requester caches the file and 0 when nobody else does.
    """
    if not 0 <= requester < placement.n_users:
        raise DomainError(f"requester {requester} outside users 0..{placement.n_users - 1}")
    if not 0 <= file < placement.n_files:
        raise DomainError(f"file {file} outside files 0..{placement.n_files - 1}")
    if placement.cached[requester, file]:
        return 1.0
    holders = placement.holders(requester, file)
    if not holders:
        return 0.0
    comm_time = sample_comm_time(net.holder_params(requester, holders), system.deadline, rng)
    return min(system.rate * comm_time, system.file_size) / system.file_size


def _offload_trial(
    net: NetworkMobility,
    placement: Placement,
    request_cdf: np.ndarray,
    system: SystemParams,
    rng: np.random.Generator,
) -> float:
    requester = int(rng.integers(net.n_users))
    row = request_cdf[requester]
    file = int(np.searchsorted(row, rng.random() * row[-1], side="right"))
    file = min(file, row.size - 1)
    return simulate_request(net, placement, requester, file, system, rng)


def estimate_offload_ratio(
    net: NetworkMobility,
    placement: Placement,
    demand: RequestModel,
    system: SystemParams,
    trials: int,
    seed: int,
    workers: Optional[int] = None,
) -> McEstimate:
    """
    Monte Carlo estimate of the network offload ratio.

    Each trial draws a requester uniformly and a file from the requester's
    popularity row, then simulates that request.
    """
    check_dimensions(net, placement, demand)
    trial = partial(_offload_trial, net, placement, np.cumsum(demand.probs, axis=1), system)
    values = run_trials(trial, trials, seed, workers)
    estimate = McEstimate(mean=float(np.mean(values)), std_error=standard_error(values), trials=trials, seed=seed)
    logger.info("Offload ratio estimate %.6f +/- %.6f (%d trials)", estimate.mean, estimate.std_error, trials)
    return estimate


def estimate_comm_time_moments(
    holders: Sequence[PairParams],
    deadline: float,
    trials: int,
    seed: int,
    workers: Optional[int] = None,
) -> CommTimeEstimate:
    """Sample mean and unbiased sample variance of the communication time."""
    if trials < 2:
        raise DomainError(f"sample variance needs at least two trials, got {trials}")
    if not deadline > 0.0:
        raise DomainError(f"deadline must be positive, got {deadline}")
    trial = partial(sample_comm_time, list(holders), deadline)
    values = run_trials(trial, trials, seed, workers)
    return CommTimeEstimate(
        mean=float(np.mean(values)),
        mean_std_error=standard_error(values),
        variance=float(np.var(values, ddof=1)),
        variance_std_error=variance_standard_error(values),
        trials=trials,
        seed=seed,
    )
