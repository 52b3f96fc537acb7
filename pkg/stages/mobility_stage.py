"""
Mobility Stage - Builds the pair contact rates of every realization at a sweep point.
Single responsibility: NetworkMobility per realization.
"""
import logging
from itertools import combinations
from typing import Any, Dict, List, Optional

import numpy as np

from config.experiment_config import base_pair_params
from mobility.contact_process import scale_network
from models.errors import DomainError
from models.experiment_model import ExperimentConfig, MobilityMode
from models.mobility_model import NetworkMobility, PairParams
from montecarlo.seeding import derive_generator

logger = logging.getLogger(__name__)

# Stream purposes under a (point, realization) key.
MOBILITY_STREAM = 0
PLACEMENT_STREAM = 1
SIMULATION_STREAM = 2


def draw_heterogeneous_params(
    cfg: ExperimentConfig, rng: np.random.Generator, n_users: Optional[int] = None
) -> NetworkMobility:
    """
    Independent gamma-distributed rates for every pair.

    Inter-contact rates follow Gamma(shape=gamma_shape_i, scale=gamma_scale_i);
    contact rates follow Gamma(shape * m^2, scale / m) with m the contact rate
    multiplier, so their mean is m times larger and their variance equal.

    Args:
        cfg: Experiment config (gamma hyperparameters)
        rng: Random stream owned by the caller
        n_users: Users to draw for, defaults to cfg.n_users

    Returns:
        NetworkMobility with one PairParams per unordered pair
    """
    if cfg.mobility_mode is not MobilityMode.GAMMA_HETEROGENEOUS:
        raise DomainError(f"heterogeneous draws need mobility_mode={MobilityMode.GAMMA_HETEROGENEOUS.value}")
    n_users = cfg.n_users if n_users is None else n_users
    pairs = list(combinations(range(n_users), 2))
    lambda_i = rng.gamma(cfg.gamma_shape_i, cfg.gamma_scale_i, size=len(pairs))
    lambda_c = rng.gamma(cfg.contact_gamma_shape, cfg.contact_gamma_scale, size=len(pairs))
    return NetworkMobility(
        n_users=n_users,
        pair_params={
            key: PairParams(lambda_c=float(c), lambda_i=float(i))
            for key, c, i in zip(pairs, lambda_c, lambda_i)
        },
    )


def build_network(cfg: ExperimentConfig, n_users: int, rng: np.random.Generator) -> NetworkMobility:
    """Base (unscaled) network of the configured mobility mode."""
    if cfg.mobility_mode is MobilityMode.HOMOGENEOUS:
        return NetworkMobility.homogeneous(n_users, base_pair_params(cfg))
    return draw_heterogeneous_params(cfg, rng, n_users)


class MobilityStage:
    """Stage responsible for the contact rates of a sweep point."""

    def build_realizations(self, cfg: ExperimentConfig, n_users: int, point: int) -> List[NetworkMobility]:
        return [
            build_network(cfg, n_users, derive_generator(cfg.seed, point, draw, MOBILITY_STREAM))
            for draw in range(cfg.placement_draws)
        ]

    def process(self, state: Dict[str, Any]) -> Dict[str, Any]:
        """
        Process state and build the networks of the current point.

        Args:
            state: Current workflow state

        Returns:
            Updated state with networks (and base networks for speed sweeps)
        """
        cfg = state["config"]
        point = state["point_index"]
        value = state["sweep_values"][point]
        logger.info("Sweep %s point %d (%g): mobility", state["sweep_name"], point, value)

        if state["sweep_name"] == "users":
            base = self.build_realizations(cfg, int(value), point)
            return {"networks": [scale_network(net, cfg.speed_factor) for net in base]}

        base = state.get("base_networks") or self.build_realizations(cfg, cfg.n_users, 0)
        return {"base_networks": base, "networks": [scale_network(net, value) for net in base]}
