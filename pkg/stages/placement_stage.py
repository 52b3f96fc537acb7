"""
Placement Stage - Draws Zipf demand and random cache placements.
Single responsibility: Placement per realization.
"""
import logging
from typing import Any, Dict, List

from caching.demand import zipf_demand
from caching.placement import random_caching
from models.caching_model import Placement, RequestModel
from models.experiment_model import ExperimentConfig
from montecarlo.seeding import derive_generator
from stages.mobility_stage import PLACEMENT_STREAM

logger = logging.getLogger(__name__)


class PlacementStage:
    """Stage responsible for demand and cache contents."""

    def build_placements(self, cfg: ExperimentConfig, demand: RequestModel, point: int) -> List[Placement]:
        """
        One random caching placement per realization, weighted by popularity.

        Args:
            cfg: Experiment config
            demand: Request probabilities of the point's users
            point: Key of the sweep point owning the streams

        Returns:
            List of placement_draws placements
        """
        return [
            random_caching(
                demand.n_users,
                cfg.n_files,
                cfg.cache_capacity,
                demand.probs[0],
                derive_generator(cfg.seed, point, draw, PLACEMENT_STREAM),
            )
            for draw in range(cfg.placement_draws)
        ]

    def process(self, state: Dict[str, Any]) -> Dict[str, Any]:
        cfg = state["config"]
        point = state["point_index"]
        logger.info(
            "Sweep %s point %d (%g): placement", state["sweep_name"], point, state["sweep_values"][point]
        )

        # Speed sweeps keep the caches of the first point.
        if state["sweep_name"] == "speed" and state.get("placements"):
            return {}

        n_users = state["networks"][0].n_users
        demand = zipf_demand(cfg.n_files, cfg.zipf_gamma, n_users)
        placement_key = point if state["sweep_name"] == "users" else 0
        return {"demand": demand, "placements": self.build_placements(cfg, demand, placement_key)}
