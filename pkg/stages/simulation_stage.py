"""
Simulation Stage - Monte Carlo offload ratio of a sweep point.
Single responsibility: pooled McEstimate over the point's realizations.
"""
import logging
from typing import Any, Dict, List

import numpy as np

from config.experiment_config import system_params
from models.estimate_model import McEstimate
from montecarlo.seeding import derive_seed
from montecarlo.simulator import estimate_offload_ratio
from stages.mobility_stage import SIMULATION_STREAM

logger = logging.getLogger(__name__)


def split_trials(trials: int, draws: int) -> List[int]:
    """Spread trials over realizations; the first ones take the remainder."""
    base, extra = divmod(trials, draws)
    return [base + (1 if draw < extra else 0) for draw in range(draws)]


def pool_estimates(estimates: List[McEstimate], trials: int, seed: int) -> McEstimate:
    """
    Equal-weight mean of independent per-realization estimates.

    The standard error is sqrt(sum SE_d^2) / D.
    """
    errors = np.array([e.std_error for e in estimates])
    return McEstimate(
        mean=float(np.mean([e.mean for e in estimates])),
        std_error=float(np.sqrt(np.sum(errors ** 2)) / len(estimates)),
        trials=trials,
        seed=seed,
    )


class SimulationStage:
    """Stage responsible for the Monte Carlo side of a sweep point."""

    def process(self, state: Dict[str, Any]) -> Dict[str, Any]:
        """
        Process state and simulate the point.

        Speed sweeps reuse the same trial seeds at every factor.

        Args:
            state: Current workflow state

        Returns:
            Updated state with mc_estimate
        """
        cfg = state["config"]
        point = state["point_index"]
        logger.info(
            "Sweep %s point %d (%g): simulation", state["sweep_name"], point, state["sweep_values"][point]
        )
        system = system_params(cfg)
        stream_key = point if state["sweep_name"] == "users" else 0
        counts = split_trials(cfg.trials, len(state["networks"]))
        estimates = [
            estimate_offload_ratio(
                net,
                placement,
                state["demand"],
                system,
                count,
                derive_seed(cfg.seed, stream_key, draw, SIMULATION_STREAM),
                workers=state.get("workers"),
            )
            for draw, (net, placement, count) in enumerate(zip(state["networks"], state["placements"], counts))
        ]
        return {"mc_estimate": pool_estimates(estimates, cfg.trials, cfg.seed)}
