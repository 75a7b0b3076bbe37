import math

import pytest
from hypothesis import given, strategies as st

from aragospot.constants import constants_profile
from aragospot.kinematics import (
    KickAccumulation,
    accumulate,
    aligned_log10_probability,
    heisenberg_kick,
    sector_probability,
    velocity_change,
)

PAPER = constants_profile("paper")
CODATA = constants_profile("codata")


def test_kick_with_rounded_constants_is_exact():
    # hbar / delta_x = 1e-34 / 1e-10 = 1e-24 kg m/s
    assert heisenberg_kick(1e-10, PAPER) == pytest.approx(1e-24, rel=1e-15)


def test_kick_with_reference_constants():
    assert heisenberg_kick(1e-10, CODATA) == pytest.approx(1.0546e-24, rel=1e-4)


def test_kick_inverse_proportionality():
    assert heisenberg_kick(2e-10, PAPER) == pytest.approx(
        heisenberg_kick(1e-10, PAPER) / 2.0, rel=1e-15
    )


@given(st.floats(1e-12, 1e3))
def test_kick_times_precision_recovers_hbar(delta_x):
    assert heisenberg_kick(delta_x, CODATA) * delta_x == pytest.approx(
        CODATA.hbar, rel=4e-16
    )


@pytest.mark.parametrize("bad", [0.0, -1e-10, float("nan")])
def test_kick_rejects_nonpositive_precision(bad):
    with pytest.raises(ValueError):
        heisenberg_kick(bad, PAPER)


def test_random_walk_accumulation_order_of_magnitude():
    acc = KickAccumulation(1e-10, 1e19, "random_walk", 7e22)
    assert accumulate(acc, PAPER) == pytest.approx(3.162e-15, rel=1e-3)


def test_coherent_accumulation_exact_value():
    acc = KickAccumulation(1e-10, 2e31, "coherent", 7e22)
    assert accumulate(acc, PAPER) == pytest.approx(2e7, rel=1e-12)


def test_single_event_is_one_kick_in_both_modes():
    for mode in ("random_walk", "coherent"):
        acc = KickAccumulation(5e-10, 1.0, mode, 7e22)
        assert accumulate(acc, PAPER) == heisenberg_kick(5e-10, PAPER)


@given(n=st.floats(0.0, 1e38))
def test_random_walk_scales_as_sqrt_of_event_count(n):
    single = accumulate(KickAccumulation(1e-10, 1.0, "random_walk", 7e22), PAPER)
    total = accumulate(KickAccumulation(1e-10, n, "random_walk", 7e22), PAPER)
    assert total == pytest.approx(math.sqrt(n) * single, rel=4e-16)


@given(n=st.floats(1.0, 1e38))
def test_coherent_dominates_random_walk(n):
    rw = accumulate(KickAccumulation(1e-10, n, "random_walk", 7e22), PAPER)
    coh = accumulate(KickAccumulation(1e-10, n, "coherent", 7e22), PAPER)
    assert coh >= rw


def test_accumulation_validation():
    with pytest.raises(ValueError):
        KickAccumulation(0.0, 1.0, "coherent", 7e22)
    with pytest.raises(ValueError):
        KickAccumulation(1e-10, -1.0, "coherent", 7e22)
    with pytest.raises(ValueError):
        KickAccumulation(1e-10, 1.0, "aligned", 7e22)
    with pytest.raises(ValueError):
        KickAccumulation(1e-10, 1.0, "coherent", 0.0)


def test_velocity_change_values():
    assert velocity_change(1e-24, 7e22) == pytest.approx(1.4286e-47, rel=1e-4)
    assert velocity_change(2e7, 7e22) == pytest.approx(2.857e-16, rel=1e-3)
    assert velocity_change(0.0, 7e22) == 0.0


def test_velocity_change_rejects_nonpositive_mass():
    with pytest.raises(ValueError):
        velocity_change(1.0, 0.0)
    with pytest.raises(ValueError):
        velocity_change(float("inf"), 1.0)


def test_sector_probability_twelve_degrees_is_about_one_percent():
    assert sector_probability(math.pi / 15.0) == pytest.approx(0.0109262, rel=1e-5)


def test_sector_probability_endpoints():
    assert sector_probability(0.0) == 0.0
    assert sector_probability(math.pi) == pytest.approx(1.0, rel=1e-15)
    assert sector_probability(math.pi / 2.0) == pytest.approx(0.5, rel=1e-15)


@given(st.tuples(st.floats(0.0, math.pi), st.floats(0.0, math.pi)))
def test_sector_probability_monotone(phis):
    lo, hi = sorted(phis)
    assert sector_probability(lo) <= sector_probability(hi)


@pytest.mark.parametrize("bad", [-0.1, math.pi + 1e-6, float("nan")])
def test_sector_probability_domain(bad):
    with pytest.raises(ValueError):
        sector_probability(bad)


def test_aligned_log10_probability_headline_value():
    # 2e31 * log10(0.01) = -4e31
    assert aligned_log10_probability(2e31, 0.01) == pytest.approx(-4e31, rel=1e-12)


def test_aligned_log10_probability_trivial_cases():
    assert aligned_log10_probability(0.0, 0.3) == 0.0
    assert aligned_log10_probability(1e30, 1.0) == 0.0


def test_aligned_log10_probability_zero_probability_sentinel():
    assert aligned_log10_probability(5.0, 0.0) == float("-inf")
    assert aligned_log10_probability(0.0, 0.0) == 0.0


@given(n=st.floats(0.0, 1e32), p=st.floats(1e-6, 1.0))
def test_aligned_log10_probability_linear_in_event_count(n, p):
    one = aligned_log10_probability(1.0, p)
    assert aligned_log10_probability(n, p) == pytest.approx(n * one, rel=1e-12, abs=1e-300)


@pytest.mark.parametrize("n,p", [(-1.0, 0.5), (1.0, -0.1), (1.0, 1.5)])
def test_aligned_log10_probability_domain(n, p):
    with pytest.raises(ValueError):
        aligned_log10_probability(n, p)
