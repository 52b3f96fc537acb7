"""
Content demand and cache placement models.
"""
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

_ROW_SUM_TOL = 1e-12


def _frozen_array(value, dtype) -> np.ndarray:
    array = np.array(value, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


class RequestModel(BaseModel):
    """Request probabilities p^r_{i,f}: one row per user, one column per file."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    probs: np.ndarray

    @field_validator("probs", mode="before")
    @classmethod
    def _as_matrix(cls, value) -> np.ndarray:
        probs = _frozen_array(value, float)
        if probs.ndim != 2 or probs.shape[0] < 1 or probs.shape[1] < 1:
            raise ValueError(f"request probabilities must be a non-empty matrix, got shape {probs.shape}")
        if np.any(probs < 0.0) or not np.all(np.isfinite(probs)):
            raise ValueError("request probabilities must be finite and non-negative")
        deviation = np.abs(probs.sum(axis=1) - 1.0)
        if np.any(deviation > _ROW_SUM_TOL):
            raise ValueError(f"every request row must sum to 1, worst deviation {deviation.max():.3e}")
        return probs

    @property
    def n_users(self) -> int:
        return self.probs.shape[0]

    @property
    def n_files(self) -> int:
        return self.probs.shape[1]


class Placement(BaseModel):
    """Binary cache matrix x_{j,f} and the per-user cache capacity."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    cached: np.ndarray
    capacity: int = Field(ge=0)

    @field_validator("cached", mode="before")
    @classmethod
    def _as_binary_matrix(cls, value) -> np.ndarray:
        raw = np.asarray(value)
        if raw.ndim != 2:
            raise ValueError(f"placement must be a matrix, got shape {raw.shape}")
        if not np.all((raw == 0) | (raw == 1)):
            raise ValueError("placement entries must be 0 or 1")
        return _frozen_array(raw, bool)

    @model_validator(mode="after")
    def _within_capacity(self) -> "Placement":
        loads = self.cached.sum(axis=1)
        if np.any(loads > self.capacity):
            worst = int(np.argmax(loads))
            raise ValueError(f"user {worst} caches {int(loads[worst])} files, capacity is {self.capacity}")
        return self

    @property
    def n_users(self) -> int:
        return self.cached.shape[0]

    @property
    def n_files(self) -> int:
        return self.cached.shape[1]

    def holders(self, requester: int, file: int) -> list:
        """Users other than the requester that cache the file."""
        return [int(j) for j in np.flatnonzero(self.cached[:, file]) if j != requester]
