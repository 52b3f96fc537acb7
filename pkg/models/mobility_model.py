"""
Mobility data models - pairwise contact processes and sampled timelines.
"""
import math
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, field_validator, model_validator


class PairParams(BaseModel):
    """Exponential rates of one user pair's contact process (1/seconds)."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"lambda_c": 0.001, "lambda_i": 0.0002}},
    )

    lambda_c: PositiveFloat
    lambda_i: PositiveFloat

    @property
    def total_rate(self) -> float:
        return self.lambda_c + self.lambda_i


PairKey = Tuple[int, int]


def pair_key(i: int, j: int) -> PairKey:
    """Canonical (min, max) key of an unordered user pair."""
    if i == j:
        raise ValueError(f"a user pair needs two distinct users, got ({i}, {j})")
    return (i, j) if i < j else (j, i)


class NetworkMobility(BaseModel):
    """
    Contact processes of every unordered user pair.

    Users are indexed 0..n_users-1. Pair timelines are independent.
    """

    model_config = ConfigDict(frozen=True)

    n_users: int = Field(ge=2)
    pair_params: Dict[PairKey, PairParams]

    @model_validator(mode="after")
    def _check_pairs(self) -> "NetworkMobility":
        expected = self.n_users * (self.n_users - 1) // 2
        if len(self.pair_params) != expected:
            raise ValueError(
                f"expected parameters for {expected} pairs of {self.n_users} users, "
                f"got {len(self.pair_params)}"
            )
        for i, j in self.pair_params:
            if not (0 <= i < j < self.n_users):
                raise ValueError(f"pair key ({i}, {j}) is not a canonical pair of users 0..{self.n_users - 1}")
        return self

    @classmethod
    def homogeneous(cls, n_users: int, params: PairParams) -> "NetworkMobility":
        """Network where every pair shares the same rates."""
        return cls(
            n_users=n_users,
            pair_params={key: params for key in combinations(range(n_users), 2)},
        )

    def pair(self, i: int, j: int) -> PairParams:
        return self.pair_params[pair_key(i, j)]

    def holder_params(self, requester: int, holders: Iterable[int]) -> List[PairParams]:
        """Pair parameters between the requester and each holder, in holder order."""
        return [self.pair(requester, j) for j in holders]

    def is_homogeneous(self) -> bool:
        return len(set(self.pair_params.values())) == 1


class ContactTimeline(BaseModel):
    """
    One pair's alternating contact / inter-contact sojourns from time 0.

    durations[0] is spent in the initial state, durations[1] in the other
    state, and so on.
    """

    model_config = ConfigDict(frozen=True)

    initially_in_contact: bool
    durations: Tuple[PositiveFloat, ...]
    horizon: PositiveFloat

    @field_validator("durations")
    @classmethod
    def _non_empty(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        if not value:
            raise ValueError("a timeline needs at least one sojourn")
        return value

    @model_validator(mode="after")
    def _covers_horizon(self) -> "ContactTimeline":
        if math.fsum(self.durations) < self.horizon:
            raise ValueError(
                f"sojourns cover {math.fsum(self.durations)} s, less than the horizon {self.horizon} s"
            )
        return self

    def boundaries(self) -> np.ndarray:
        """State change instants, accumulated in extended precision."""
        return np.cumsum(np.asarray(self.durations, dtype=np.longdouble))

    def contact_intervals(self, window: Optional[float] = None) -> List[Tuple[float, float]]:
        """In-contact intervals clipped to [0, window]."""
        window = self.horizon if window is None else window
        intervals = []
        start = np.longdouble(0.0)
        in_contact = self.initially_in_contact
        for end in self.boundaries():
            if start >= window:
                break
            if in_contact:
                intervals.append((float(start), float(min(end, np.longdouble(window)))))
            start = end
            in_contact = not in_contact
        return intervals

    def contact_time(self, window: Optional[float] = None) -> float:
        return math.fsum(end - start for start, end in self.contact_intervals(window))

    def state_at(self, times: np.ndarray) -> np.ndarray:
        """Contact indicator at each instant (True = in contact)."""
        times = np.asarray(times, dtype=np.longdouble)
        index = np.searchsorted(self.boundaries(), times, side="right")
        return (index % 2 == 0) == self.initially_in_contact
