"""
Tests for the per-user and network offload ratios.
"""
import numpy as np
import pytest

from analytics.offload_ratio import aggregate_offload_ratio, per_user_offload_ratios
from caching.demand import zipf_demand, zipf_pmf
from caching.placement import random_caching, uniform_all_same_placement
from mobility.contact_process import scale_network
from models.errors import DomainError
from models.mobility_model import NetworkMobility

N_USERS = 15
N_FILES = 100


@pytest.fixture
def network(pair):
    return NetworkMobility.homogeneous(N_USERS, pair)


@pytest.fixture
def demand():
    return zipf_demand(N_FILES, 0.6, N_USERS)


def test_everything_cached_offloads_all(network, demand, system):
    placement = uniform_all_same_placement(N_USERS, N_FILES, N_FILES)
    assert aggregate_offload_ratio(network, placement, demand, system) == pytest.approx(1.0, abs=1e-12)


def test_empty_caches_offload_nothing(network, demand, system):
    placement = uniform_all_same_placement(N_USERS, N_FILES, 0)
    assert aggregate_offload_ratio(network, placement, demand, system) == 0.0


def test_identical_caches_ignore_speed(network, demand, system):
    placement = uniform_all_same_placement(N_USERS, N_FILES, 5)
    expected = zipf_pmf(N_FILES, 0.6)[:5].sum()
    values = [aggregate_offload_ratio(scale_network(network, s), placement, demand, system) for s in (1.0, 2.0, 4.0, 8.0)]
    assert values[0] == pytest.approx(expected, rel=1e-12)
    assert all(v == values[0] for v in values)


def test_per_user_ratios_average_to_network_ratio(network, demand, system, rng):
    placement = random_caching(N_USERS, N_FILES, 5, demand.probs[0], rng)
    per_user = per_user_offload_ratios(network, placement, demand, system)
    assert per_user.shape == (N_USERS,)
    assert np.all((per_user >= 0.0) & (per_user <= 1.0))
    assert aggregate_offload_ratio(network, placement, demand, system) == pytest.approx(per_user.mean(), rel=1e-14)


def test_ratio_increases_with_speed(network, demand, system, rng):
    placement = random_caching(N_USERS, N_FILES, 5, demand.probs[0], rng)
    values = [
        aggregate_offload_ratio(scale_network(network, s), placement, demand, system) for s in (1.0, 2.0, 4.0, 8.0, 16.0)
    ]
    assert all(later > earlier for earlier, later in zip(values, values[1:]))


def test_speed_gain_per_unit_speed_decreases(network, demand, system):
    grid = np.array([1.0, 2.0, 4.0, 8.0, 16.0])
    curves = []
    for seed in (1, 2, 3):
        placement = random_caching(N_USERS, N_FILES, 5, demand.probs[0], np.random.default_rng(seed))
        curves.append([aggregate_offload_ratio(scale_network(network, s), placement, demand, system) for s in grid])
    slopes = np.diff(np.mean(curves, axis=0)) / np.diff(grid)
    assert np.all(slopes > 0.0)
    assert np.all(np.diff(slopes) < 0.0)


def test_dimension_mismatch(network, system):
    placement = uniform_all_same_placement(N_USERS, N_FILES, 5)
    with pytest.raises(DomainError):
        aggregate_offload_ratio(network, placement, zipf_demand(N_FILES, 0.6, N_USERS - 1), system)
    with pytest.raises(DomainError):
        aggregate_offload_ratio(network, placement, zipf_demand(N_FILES + 1, 0.6, N_USERS), system)
