"""
Tests for the pair contact process and timeline sampling.
"""
import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy import stats

from mobility.contact_process import (
    conditional_idle_prob,
    sample_timeline,
    scale_network,
    scale_speed,
    stationary_contact_prob,
    stationary_idle_prob,
)
from models.errors import DomainError
from models.mobility_model import ContactTimeline, NetworkMobility, PairParams

LONG_HORIZON = 1e7
FAST_PAIR = PairParams(lambda_c=0.01, lambda_i=0.002)


@pytest.fixture(scope="module")
def long_timeline() -> ContactTimeline:
    return sample_timeline(FAST_PAIR, LONG_HORIZON, np.random.default_rng(99))


def test_stationary_probabilities(pair):
    assert stationary_contact_prob(pair) == pytest.approx(1.0 / 6.0, rel=1e-14)
    assert stationary_contact_prob(pair) + stationary_idle_prob(pair) == pytest.approx(1.0, rel=1e-15)


def test_conditional_idle_limits(pair):
    assert conditional_idle_prob(pair, 0.0) == pytest.approx(1.0, rel=1e-15)
    assert conditional_idle_prob(pair, 1e6) == pytest.approx(stationary_idle_prob(pair), rel=1e-12)
    with pytest.raises(DomainError):
        conditional_idle_prob(pair, -1.0)


def test_scale_speed_keeps_stationary_law(pair):
    fast = scale_speed(pair, 4.0)
    assert fast.lambda_c == pytest.approx(0.004)
    assert fast.lambda_i == pytest.approx(0.0008)
    assert stationary_contact_prob(fast) == pytest.approx(stationary_contact_prob(pair), rel=1e-14)
    for s in (0.0, -2.0, float("inf"), float("nan")):
        with pytest.raises(DomainError):
            scale_speed(pair, s)


def test_network_scaling_and_lookup(pair):
    net = NetworkMobility.homogeneous(4, pair)
    assert net.is_homogeneous()
    assert net.pair(3, 1) == net.pair(1, 3) == pair
    scaled = scale_network(net, 2.0)
    assert scaled.pair(0, 2).lambda_c == pytest.approx(0.002)
    assert scaled.holder_params(0, [1, 3]) == [scale_speed(pair, 2.0)] * 2


def test_network_rejects_missing_pairs(pair):
    with pytest.raises(ValidationError):
        NetworkMobility(n_users=3, pair_params={(0, 1): pair, (0, 2): pair})


def test_timeline_covers_horizon(pair, rng):
    for _ in range(50):
        timeline = sample_timeline(pair, 300.0, rng)
        assert math.fsum(timeline.durations) >= 300.0
        assert 0.0 <= timeline.contact_time(300.0) <= 300.0


def test_forced_initial_state(pair, rng):
    timeline = sample_timeline(pair, 300.0, rng, initially_in_contact=True)
    assert timeline.initially_in_contact
    assert bool(timeline.state_at(np.array([0.0]))[0])


def test_timeline_rejects_short_cover():
    with pytest.raises(ValidationError):
        ContactTimeline(initially_in_contact=False, durations=(1.0, 2.0), horizon=10.0)


def test_state_lookup_matches_intervals():
    timeline = ContactTimeline(initially_in_contact=False, durations=(5.0, 10.0, 20.0), horizon=35.0)
    assert timeline.contact_intervals() == [(5.0, 15.0)]
    states = timeline.state_at(np.array([0.0, 4.9, 5.0, 14.9, 15.0, 30.0]))
    assert states.tolist() == [False, False, True, True, False, False]


def test_long_run_contact_fraction(long_timeline):
    fraction = long_timeline.contact_time(LONG_HORIZON) / LONG_HORIZON
    assert fraction == pytest.approx(stationary_contact_prob(FAST_PAIR), abs=1e-2)


def test_conditional_idle_probability(long_timeline):
    lag = 100.0
    times = np.arange(0.0, LONG_HORIZON - lag, 50.0)
    idle_now = ~long_timeline.state_at(times)
    idle_later = ~long_timeline.state_at(times + lag)
    observed = idle_later[idle_now].mean()
    assert observed == pytest.approx(conditional_idle_prob(FAST_PAIR, lag), abs=1e-2)


def test_contact_sojourns_are_exponential(long_timeline):
    durations = np.array(long_timeline.durations[:-1])
    first_contact = 0 if long_timeline.initially_in_contact else 1
    contact = durations[first_contact::2]
    idle = durations[1 - first_contact::2]
    assert stats.kstest(contact, "expon", args=(0.0, 1.0 / FAST_PAIR.lambda_c)).pvalue > 1e-3
    assert stats.kstest(idle, "expon", args=(0.0, 1.0 / FAST_PAIR.lambda_i)).pvalue > 1e-3


def test_speed_scaling_shrinks_sojourns():
    s = 3.0
    horizon = 2e6
    fast = sample_timeline(scale_speed(FAST_PAIR, s), horizon / s, np.random.default_rng(31))
    slow = sample_timeline(FAST_PAIR, horizon, np.random.default_rng(32))
    assert len(fast.durations) > 2000
    assert len(slow.durations) > 2000
    fast_durations = np.array(fast.durations[:-1])
    slow_durations = np.array(slow.durations[:-1]) / s
    fast_first = 0 if fast.initially_in_contact else 1
    slow_first = 0 if slow.initially_in_contact else 1
    contact = stats.ks_2samp(fast_durations[fast_first::2], slow_durations[slow_first::2])
    idle = stats.ks_2samp(fast_durations[1 - fast_first::2], slow_durations[1 - slow_first::2])
    assert contact.pvalue > 1e-3
    assert idle.pvalue > 1e-3
