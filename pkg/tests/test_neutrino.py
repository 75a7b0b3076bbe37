import math

import pytest
from hypothesis import given, strategies as st

from aragospot.constants import constants_profile
from aragospot.neutrino import (
    NeutrinoModel,
    NeutrinoSpecies,
    arago_contrast,
    de_broglie_wavelength,
    diffracted_rate,
    interaction_fraction,
    pp_chain_species,
    solar_neutrino_model,
    total_pass_rate,
)

PAPER = constants_profile("paper")
CODATA = constants_profile("codata")


def test_species_table_has_the_five_fusion_chain_entries():
    species = pp_chain_species()
    assert len(species) == 5
    assert [s.energy_mev for s in species] == [0.42, 1.44, 0.86, 15.0, 18.8]
    assert [s.kind for s in species] == [
        "endpoint",
        "line",
        "line",
        "endpoint",
        "endpoint",
    ]


def test_beryllium_entry_records_the_secondary_line():
    be7 = pp_chain_species()[2]
    assert "0.38" in be7.branch_note
    assert "10" in be7.branch_note


def test_species_validation():
    with pytest.raises(ValueError):
        NeutrinoSpecies("x", -1.0, "line")
    with pytest.raises(ValueError):
        NeutrinoSpecies("x", 1.0, "resonance")


def test_solar_model_wiring():
    model = solar_neutrino_model(PAPER)
    assert model.mean_energy_mev == 0.5
    assert model.flux_per_m2_s == 7e14
    assert model.mean_free_path_m == pytest.approx(1000.0 * 9.4607e15, rel=1e-15)
    assert len(model.species) == 5


def test_model_validation():
    with pytest.raises(ValueError):
        NeutrinoModel(pp_chain_species(), 0.0, 7e14, 1e19)


def test_de_broglie_wavelength_with_rounded_constants():
    # 7e-34 * 3e8 / (0.5e6 * 1.6e-19) = 2.625e-12 m, i.e. "about 2.5 pm"
    assert de_broglie_wavelength(0.5, PAPER) == pytest.approx(2.625e-12, rel=1e-12)


def test_de_broglie_wavelength_with_reference_constants():
    # hc = 1.23984e-6 eV m  ->  2.480e-12 m at 0.5 MeV
    assert de_broglie_wavelength(0.5, CODATA) == pytest.approx(2.4797e-12, rel=1e-4)


def test_de_broglie_wavelength_inverse_in_energy():
    lam = de_broglie_wavelength(0.5, CODATA)
    assert de_broglie_wavelength(1.0, CODATA) == pytest.approx(lam / 2.0, rel=1e-14)


@given(st.floats(1e-3, 1e3))
def test_de_broglie_wavelength_times_energy_is_constant(energy_mev):
    hc = CODATA.h * CODATA.c
    lam = de_broglie_wavelength(energy_mev, CODATA)
    assert lam * energy_mev * 1e6 * CODATA.eV == pytest.approx(hc, rel=4e-16)


@pytest.mark.parametrize("bad", [0.0, -0.5, float("nan")])
def test_de_broglie_rejects_nonpositive_energy(bad):
    with pytest.raises(ValueError):
        de_broglie_wavelength(bad, PAPER)


def test_interaction_fraction_lunar_diameter():
    mfp = 1000.0 * PAPER.ly
    assert interaction_fraction(2e6, mfp) == pytest.approx(2.114e-13, rel=1e-3)


def test_interaction_fraction_crater_scale():
    mfp = 1000.0 * PAPER.ly
    assert interaction_fraction(100.0, mfp) == pytest.approx(1.057e-17, rel=1e-3)


def test_interaction_fraction_zero_path():
    assert interaction_fraction(0.0, 1e19) == 0.0


def test_interaction_fraction_refuses_thick_targets():
    with pytest.raises(ValueError, match="thin-target"):
        interaction_fraction(2e17, 1e19)  # 2 % of the mean free path


def test_interaction_fraction_rejects_bad_inputs():
    with pytest.raises(ValueError):
        interaction_fraction(-1.0, 1e19)
    with pytest.raises(ValueError):
        interaction_fraction(1.0, 0.0)


def test_total_pass_rate_examples():
    assert total_pass_rate(7e14, 1e6) == pytest.approx(2.199e27, rel=1e-3)
    assert total_pass_rate(7e14, 1.7e6) == pytest.approx(6.357e27, rel=1e-3)


def test_total_pass_rate_area_scaling():
    assert total_pass_rate(7e14, 2e6) == pytest.approx(
        4.0 * total_pass_rate(7e14, 1e6), rel=1e-15
    )


def test_diffracted_rate_examples():
    assert diffracted_rate(2e-13, 7e14, 1e6) == pytest.approx(4.398e14, rel=1e-3)
    assert diffracted_rate(2.1e-13, 7e14, 1.7e6) == pytest.approx(1.335e15, rel=1e-3)
    assert diffracted_rate(0.0, 7e14, 1e6) == 0.0


@given(
    alpha=st.floats(0.0, 1.0),
    flux=st.floats(1e10, 1e20),
    radius=st.floats(1.0, 1e7),
)
def test_diffracted_rate_factorizes_exactly(alpha, flux, radius):
    assert diffracted_rate(alpha, flux, radius) == alpha * total_pass_rate(flux, radius)


def test_arago_contrast_is_the_interacting_fraction():
    assert arago_contrast(2.1e-13) == 2.1e-13
    assert arago_contrast(1.0) == 1.0
    assert arago_contrast(0.0) == 0.0


@pytest.mark.parametrize("bad", [-0.1, 1.1, float("nan")])
def test_contrast_and_rate_domain_checks(bad):
    with pytest.raises(ValueError):
        arago_contrast(bad)
    with pytest.raises(ValueError):
        diffracted_rate(bad, 7e14, 1e6)
