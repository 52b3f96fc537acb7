"""
System parameters and communication-time distribution models.
"""
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, model_validator

# Relative slack on the bounded-variable variance bound, absorbs quadrature error.
_VARIANCE_BOUND_RTOL = 1e-9


class SystemParams(BaseModel):
    """File size C (bits), D2D rate R (bits/s) and delay threshold T^d (s)."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"file_size": 1.5e8, "rate": 1e6, "deadline": 300.0}},
    )

    file_size: PositiveFloat
    rate: PositiveFloat
    deadline: PositiveFloat

    @model_validator(mode="after")
    def _deadline_exceeds_download_time(self) -> "SystemParams":
        if self.deadline <= self.file_size / self.rate:
            raise ValueError(
                f"deadline {self.deadline} s must exceed the download time "
                f"file_size/rate = {self.file_size / self.rate} s"
            )
        return self

    @property
    def size_ratio(self) -> float:
        """r = C / (T^d R), the share of the window needed to fetch the file."""
        return self.file_size / (self.deadline * self.rate)


class CommTimeMoments(BaseModel):
    """Mean and variance of the communication time within the deadline window."""

    model_config = ConfigDict(frozen=True)

    mean: float = Field(ge=0.0)
    variance: float = Field(ge=0.0)
    deadline: PositiveFloat

    @model_validator(mode="after")
    def _bounded(self) -> "CommTimeMoments":
        if self.mean > self.deadline:
            raise ValueError(f"mean {self.mean} exceeds the deadline {self.deadline}")
        bound = self.mean * (self.deadline - self.mean)
        if self.variance > bound + _VARIANCE_BOUND_RTOL * self.deadline ** 2:
            raise ValueError(
                f"variance {self.variance} exceeds the bounded-variable limit "
                f"mean*(deadline-mean) = {bound}"
            )
        return self


class BetaParams(BaseModel):
    """Shape parameters of the beta law fitted to T^c / T^d."""

    model_config = ConfigDict(frozen=True)

    alpha: PositiveFloat
    beta: PositiveFloat

    def mean(self) -> float:
        return self.alpha / (self.alpha + self.beta)

    def variance(self) -> float:
        total = self.alpha + self.beta
        return self.alpha * self.beta / (total * total * (total + 1.0))
