"""
Analytic Stage - Beta-approximation offload ratio of a sweep point.
"""
import logging
from typing import Any, Dict

import numpy as np

from analytics.offload_ratio import aggregate_offload_ratio
from config.experiment_config import system_params

logger = logging.getLogger(__name__)


class AnalyticStage:
    """Averages the analytic ratio over the point's realizations."""

    def process(self, state: Dict[str, Any]) -> Dict[str, Any]:
        cfg = state["config"]
        point = state["point_index"]
        logger.info(
            "Sweep %s point %d (%g): analytic", state["sweep_name"], point, state["sweep_values"][point]
        )
        system = system_params(cfg)
        ratios = [
            aggregate_offload_ratio(net, placement, state["demand"], system)
            for net, placement in zip(state["networks"], state["placements"])
        ]
        return {"analytic_ratio": float(np.clip(np.mean(ratios), 0.0, 1.0))}
