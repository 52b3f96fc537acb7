"""
Shared fixtures for the offload evaluator test suite.
"""
import numpy as np
import pytest

from models.experiment_model import ExperimentConfig
from models.mobility_model import PairParams
from models.system_model import SystemParams


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240517)


@pytest.fixture
def pair() -> PairParams:
    """Default homogeneous pair: contact 0.001/s, inter-contact 0.0002/s."""
    return PairParams(lambda_c=0.001, lambda_i=0.0002)


@pytest.fixture
def system() -> SystemParams:
    """C = 1.5e8 bits, R = 1e6 bits/s, T = 300 s, so r = 0.5."""
    return SystemParams(file_size=1.5e8, rate=1e6, deadline=300.0)


@pytest.fixture
def small_config() -> ExperimentConfig:
    """Homogeneous network small enough for full sweeps in tests."""
    return ExperimentConfig(
        n_users=5,
        n_files=12,
        cache_capacity=2,
        trials=400,
        placement_draws=2,
        seed=11,
    )
