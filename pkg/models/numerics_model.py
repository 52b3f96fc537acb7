"""
Numerical result models.
"""
from pydantic import BaseModel, ConfigDict, Field


class QuadratureResult(BaseModel):
    """Outcome of an adaptive quadrature run."""

    model_config = ConfigDict(frozen=True)

    value: float
    error_estimate: float = Field(ge=0.0)
    evaluations: int = Field(ge=1)
