import math

import pytest

from aragospot.constants import (
    Constants,
    DimensionError,
    PROFILE_NAMES,
    Quantity,
    Unit,
    constants_profile,
)

ALL_UNITS = list(Unit)


def test_profile_names():
    assert set(PROFILE_NAMES) == {"paper", "codata"}


def test_paper_profile_rounded_values():
    c = constants_profile("paper")
    assert c.moon_mass == 7e22
    assert c.solar_neutrino_flux == 7e14
    assert c.c == 3e8
    assert c.earth_moon_distance == 4e8
    assert c.moon_radius == 1.7e6


def test_paper_profile_h_and_hbar_are_rounded_independently():
    # The rounded profile carries h = 7e-34 and hbar = 1e-34 side by side;
    # h = 2*pi*hbar intentionally does not hold there (see module docs).
    c = constants_profile("paper")
    assert c.h == 7e-34
    assert c.hbar == 1e-34
    assert abs(c.h / (2.0 * math.pi * c.hbar) - 1.0) > 0.05


def test_codata_hbar_is_h_over_two_pi():
    c = constants_profile("codata")
    assert c.hbar == pytest.approx(c.h / (2.0 * math.pi), rel=1e-15)


def test_default_profile_is_paper():
    assert constants_profile().profile == "paper"


def test_unknown_profile_rejected():
    with pytest.raises(ValueError, match="unknown constants profile"):
        constants_profile("si")


def test_profiles_agree_within_factor_two():
    paper = constants_profile("paper").numeric_fields()
    codata = constants_profile("codata").numeric_fields()
    assert set(paper) == set(codata)
    for name in paper:
        ratio = paper[name] / codata[name]
        assert 0.5 < ratio < 2.0, f"{name}: paper/codata = {ratio}"


@pytest.mark.parametrize("profile", PROFILE_NAMES)
def test_all_constants_strictly_positive(profile):
    for name, value in constants_profile(profile).numeric_fields().items():
        assert value > 0.0 and math.isfinite(value), name


def test_constants_reject_nonpositive_values():
    good = constants_profile("codata")
    with pytest.raises(ValueError, match="must be finite and > 0"):
        Constants(**{**good.__dict__, "moon_mass": -1.0})


@pytest.mark.parametrize("left", ALL_UNITS)
@pytest.mark.parametrize("right", ALL_UNITS)
def test_dimension_tags_checked_for_all_pairs(left, right):
    a = Quantity(1.0, left)
    b = Quantity(2.0, right)
    if left is right:
        assert (a + b).value == 3.0
        assert (a - b).unit is left
    else:
        with pytest.raises(DimensionError):
            a + b
        with pytest.raises(DimensionError):
            a - b
        with pytest.raises(DimensionError):
            a < b


def test_quantity_scalar_arithmetic():
    q = Quantity(3.0, Unit.LENGTH)
    assert (2.0 * q).value == 6.0
    assert (q / 2.0).value == 1.5
    assert (-q).value == -3.0
    assert (q * 2).unit is Unit.LENGTH


def test_quantity_rejects_quantity_multiplication():
    q = Quantity(3.0, Unit.LENGTH)
    with pytest.raises(DimensionError):
        q * Quantity(2.0, Unit.LENGTH)
    with pytest.raises(DimensionError):
        q / Quantity(2.0, Unit.TIME)
    with pytest.raises(DimensionError):
        q + 1.0  # bare numbers carry no dimension tag
