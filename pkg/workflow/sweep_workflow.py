"""
LangGraph workflow for experiment sweeps.
Every sweep point runs mobility -> placement -> analytic -> simulation -> record,
then loops to the next point or finishes with the CSV output.
"""
import logging
from pathlib import Path
from typing import List, Optional, Sequence, Union

from langgraph.graph import END, StateGraph

from models.errors import ConfigValidationError, DomainError
from models.experiment_model import ExperimentConfig, SweepRow
from stages.analytic_stage import AnalyticStage
from stages.csv_output_stage import CsvOutputStage
from stages.mobility_stage import MobilityStage
from stages.placement_stage import PlacementStage
from stages.simulation_stage import SimulationStage
from state.experiment_state_schema import SweepState
from templates.sweep_row_template import build_sweep_row

logger = logging.getLogger(__name__)

# Graph steps per sweep point, plus the output node and slack.
_STEPS_PER_POINT = 5
_STEP_SLACK = 10


class SweepWorkflow:
    """LangGraph workflow for orchestrating a parameter sweep."""

    def __init__(self, workers: Optional[int] = None):
        self.workers = workers
        self.mobility = MobilityStage()
        self.placement = PlacementStage()
        self.analytic = AnalyticStage()
        self.simulation = SimulationStage()
        self.csv_output = CsvOutputStage()

        self.workflow = self._build_workflow()
        self.app = self.workflow.compile()

    def _build_workflow(self) -> StateGraph:
        workflow = StateGraph(SweepState)

        workflow.add_node("mobility", self.mobility.process)
        workflow.add_node("placement", self.placement.process)
        workflow.add_node("analytic", self.analytic.process)
        workflow.add_node("simulation", self.simulation.process)
        workflow.add_node("record", self._record_node)
        workflow.add_node("csv_output", self.csv_output.process)

        workflow.add_edge("mobility", "placement")
        workflow.add_edge("placement", "analytic")
        workflow.add_edge("analytic", "simulation")
        workflow.add_edge("simulation", "record")
        workflow.add_conditional_edges(
            "record",
            self._next_step,
            {"next_point": "mobility", "done": "csv_output"},
        )
        workflow.add_edge("csv_output", END)

        workflow.set_entry_point("mobility")
        return workflow

    def _record_node(self, state: SweepState) -> dict:
        """Turn the evaluated point into a row and advance."""
        point = state["point_index"]
        row = build_sweep_row(
            state["sweep_name"], state["sweep_values"][point], state["analytic_ratio"], state["mc_estimate"]
        )
        logger.info(
            "Sweep %s point %d: analytic %.6f, simulated %.6f", row.sweep_name, point, row.analytic_ratio, row.mc_ratio
        )
        return {"rows": [row], "point_index": point + 1}

    @staticmethod
    def _next_step(state: SweepState) -> str:
        return "next_point" if state["point_index"] < len(state["sweep_values"]) else "done"

    def run(
        self,
        cfg: ExperimentConfig,
        sweep_name: str,
        sweep_values: Sequence[float],
        output_path: Optional[Union[str, Path]] = None,
    ) -> SweepState:
        """
        Run one sweep.

        Args:
            cfg: Validated experiment config with a seed
            sweep_name: "users" or "speed"
            sweep_values: Points of the sweep, in output order
            output_path: CSV destination; nothing is written when None

        Returns:
            Final state with the rows and created files
        """
        if cfg.seed is None:
            raise ConfigValidationError("sweeps need an explicit seed")
        if not sweep_values:
            raise DomainError(f"{sweep_name} sweep needs at least one value")

        initial_state: SweepState = {
            "config": cfg,
            "sweep_name": sweep_name,
            "sweep_values": [float(v) for v in sweep_values],
            "output_path": str(output_path) if output_path is not None else None,
            "workers": self.workers,
            "point_index": 0,
            "base_networks": None,
            "networks": None,
            "demand": None,
            "placements": None,
            "analytic_ratio": None,
            "mc_estimate": None,
            "rows": [],
            "files_created": None,
        }
        config = {"recursion_limit": _STEPS_PER_POINT * len(sweep_values) + _STEP_SLACK}
        return self.app.invoke(initial_state, config)


def sweep_users(
    cfg: ExperimentConfig,
    user_counts: Sequence[int],
    output_path: Optional[Union[str, Path]] = None,
    workers: Optional[int] = None,
) -> List[SweepRow]:
    """
    Offload ratio against the number of users.

    Every count gets fresh seeded rates and placements.
    """
    if not user_counts:
        raise DomainError("user_counts must not be empty")
    for count in user_counts:
        if int(count) != count or count < 2:
            raise DomainError(f"user counts must be integers >= 2, got {count}")
    final_state = SweepWorkflow(workers).run(cfg, "users", [int(c) for c in user_counts], output_path)
    return list(final_state["rows"])


def sweep_speed(
    cfg: ExperimentConfig,
    speed_factors: Sequence[float],
    output_path: Optional[Union[str, Path]] = None,
    workers: Optional[int] = None,
) -> List[SweepRow]:
    """
    Offload ratio against the speed factor s.

    Base rates and placements are drawn once; only the rates are scaled.
    """
    if not speed_factors:
        raise DomainError("speed_factors must not be empty")
    for factor in speed_factors:
        if not factor > 0.0:
            raise DomainError(f"speed factors must be positive, got {factor}")
    final_state = SweepWorkflow(workers).run(cfg, "speed", speed_factors, output_path)
    return list(final_state["rows"])
