"""
Monte Carlo estimate models.
"""
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field

# Two-sided 95% normal quantile.
Z_95 = 1.96


class McEstimate(BaseModel):
    """Sample mean of a per-trial quantity with its standard error."""

    model_config = ConfigDict(frozen=True)

    mean: float
    std_error: float = Field(ge=0.0)
    trials: int = Field(ge=1)
    seed: int = Field(ge=0, lt=2 ** 64)

    def confidence_interval(self, z: float = Z_95) -> Tuple[float, float]:
        half_width = z * self.std_error
        return self.mean - half_width, self.mean + half_width


class CommTimeEstimate(BaseModel):
    """Sample moments of the communication time."""

    model_config = ConfigDict(frozen=True)

    mean: float = Field(ge=0.0)
    mean_std_error: float = Field(ge=0.0)
    variance: float = Field(ge=0.0)
    variance_std_error: float = Field(ge=0.0)
    trials: int = Field(ge=1)
    seed: int = Field(ge=0, lt=2 ** 64)
