"""
Experiment configuration and sweep result models.
"""
from enum import Enum
from typing import Optional

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeFloat,
    PositiveFloat,
    PositiveInt,
    model_validator,
)


class MobilityMode(str, Enum):
    HOMOGENEOUS = "homogeneous"
    GAMMA_HETEROGENEOUS = "gamma_heterogeneous"


class ExperimentConfig(BaseModel):
    """Validated settings of one experiment (network, system, mobility, simulation)."""

    model_config = ConfigDict(
        frozen=True,
        extra="forbid",
        use_enum_values=False,
        json_schema_extra={
            "example": {
                "n_users": 15,
                "n_files": 100,
                "cache_capacity": 5,
                "zipf_gamma": 0.6,
                "deadline_s": 300.0,
                "file_size_bits": 1.5e8,
                "rate_bps": 1e6,
                "mobility_mode": "homogeneous",
                "lambda_c": 0.001,
                "lambda_i": 0.0002,
                "trials": 10000,
                "seed": 7,
            }
        },
    )

    # network
    n_users: int = Field(default=15, ge=2)
    n_files: PositiveInt = 100
    cache_capacity: int = Field(default=5, ge=0)
    zipf_gamma: NonNegativeFloat = 0.6

    # system
    deadline_s: PositiveFloat = 300.0
    file_size_bits: PositiveFloat = 1.5e8
    rate_bps: PositiveFloat = 1e6

    # mobility
    mobility_mode: MobilityMode = MobilityMode.HOMOGENEOUS
    lambda_c: PositiveFloat = 0.001
    lambda_i: PositiveFloat = 0.0002
    gamma_shape_i: PositiveFloat = 4.43
    gamma_scale_i: PositiveFloat = 1.0 / 1088.0
    contact_rate_multiplier: PositiveFloat = 5.0
    speed_factor: PositiveFloat = 1.0

    # simulation
    trials: PositiveInt = 10000
    seed: Optional[int] = Field(default=None, ge=0, lt=2 ** 64)
    placement_draws: PositiveInt = 10

    @model_validator(mode="after")
    def _check_invariants(self) -> "ExperimentConfig":
        if self.deadline_s <= self.file_size_bits / self.rate_bps:
            raise ValueError(
                "deadline_s must exceed file_size_bits / rate_bps "
                f"({self.deadline_s} <= {self.file_size_bits / self.rate_bps}): "
                "the delay threshold has to be larger than the time to download a file"
            )
        if self.cache_capacity > self.n_files:
            raise ValueError(f"cache_capacity {self.cache_capacity} exceeds n_files {self.n_files}")
        if self.placement_draws > self.trials:
            raise ValueError(f"placement_draws {self.placement_draws} exceeds trials {self.trials}")
        return self

    @property
    def contact_gamma_shape(self) -> float:
        """Shape of the contact-rate gamma law: mean m times, same variance as inter-contact."""
        return self.gamma_shape_i * self.contact_rate_multiplier ** 2

    @property
    def contact_gamma_scale(self) -> float:
        return self.gamma_scale_i / self.contact_rate_multiplier


class SweepRow(BaseModel):
    """One point of an experiment sweep: analytic ratio against the simulated one."""

    model_config = ConfigDict(frozen=True)

    sweep_name: str
    sweep_value: float
    analytic_ratio: float = Field(ge=0.0, le=1.0)
    mc_ratio: float = Field(ge=0.0, le=1.0)
    mc_ci_low: float
    mc_ci_high: float
    trials: PositiveInt
    seed: int = Field(ge=0, lt=2 ** 64)

    @model_validator(mode="after")
    def _ordered_interval(self) -> "SweepRow":
        if not (self.mc_ci_low <= self.mc_ratio <= self.mc_ci_high):
            raise ValueError(
                f"confidence interval [{self.mc_ci_low}, {self.mc_ci_high}] does not contain {self.mc_ratio}"
            )
        return self
