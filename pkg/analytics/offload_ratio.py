"""
Network data offloading ratio from the beta approximation.
"""
import numpy as np

from analytics.beta_approximation import per_request_offload_ratio
from analytics.communication_moments import comm_time_moments
from models.caching_model import Placement, RequestModel
from models.errors import DomainError
from models.mobility_model import NetworkMobility
from models.system_model import SystemParams


def check_dimensions(net: NetworkMobility, placement: Placement, demand: RequestModel) -> None:
    """Users and files must agree across mobility, placement and demand."""
    if not (net.n_users == placement.n_users == demand.n_users):
        raise DomainError(
            f"user counts disagree: mobility {net.n_users}, placement {placement.n_users}, "
            f"demand {demand.n_users}"
        )
    if placement.n_files != demand.n_files:
        raise DomainError(f"file counts disagree: placement {placement.n_files}, demand {demand.n_files}")


def request_offload_ratio(
    net: NetworkMobility, placement: Placement, requester: int, file: int, system: SystemParams
) -> float:
    """Offload ratio of a file the requester does not cache; 0 without holders."""
    holders = placement.holders(requester, file)
    if not holders:
        return 0.0
    moments = comm_time_moments(net.holder_params(requester, holders), system.deadline)
    return per_request_offload_ratio(moments, system)


def per_user_offload_ratios(
    net: NetworkMobility, placement: Placement, demand: RequestModel, system: SystemParams
) -> np.ndarray:
    """
    Offload ratio of each user: sum_f p_{i,f} [x_{i,f} + (1 - x_{i,f}) P_{i,f}].
    """
    check_dimensions(net, placement, demand)
    ratios = np.zeros(net.n_users)
    for i in range(net.n_users):
        row = demand.probs[i]
        terms = []
        for f in np.flatnonzero(row > 0.0):
            if placement.cached[i, f]:
                terms.append(row[f])
            else:
                terms.append(row[f] * request_offload_ratio(net, placement, i, int(f), system))
        ratios[i] = np.sum(terms) if terms else 0.0
    return np.clip(ratios, 0.0, 1.0)


def aggregate_offload_ratio(
    net: NetworkMobility, placement: Placement, demand: RequestModel, system: SystemParams
) -> float:
    """Network offload ratio, the mean of the per-user ratios."""
    return float(np.clip(np.mean(per_user_offload_ratios(net, placement, demand, system)), 0.0, 1.0))
