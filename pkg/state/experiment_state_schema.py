"""
State schema for the sweep workflow.
"""
import operator
from typing import Annotated, Dict, List, Optional, TypedDict

from models.caching_model import Placement, RequestModel
from models.estimate_model import McEstimate
from models.experiment_model import ExperimentConfig, SweepRow
from models.mobility_model import NetworkMobility


class SweepState(TypedDict):
    """
    State of one sweep run.
    Every stage reads from and writes to this shared state.
    """
    # Input
    config: ExperimentConfig
    sweep_name: str
    sweep_values: List[float]
    output_path: Optional[str]
    workers: Optional[int]

    # Current point
    point_index: int

    # Mobility phase: one network per realization
    base_networks: Optional[List[NetworkMobility]]
    networks: Optional[List[NetworkMobility]]

    # Placement phase
    demand: Optional[RequestModel]
    placements: Optional[List[Placement]]

    # Evaluation phase
    analytic_ratio: Optional[float]
    mc_estimate: Optional[McEstimate]

    # Output
    rows: Annotated[List[SweepRow], operator.add]
    files_created: Optional[Dict[str, str]]
