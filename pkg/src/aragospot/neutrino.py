"""Solar-neutrino source model: species table, de Broglie wavelength,
thin-target interaction fractions, diffracted rates and spot contrast.

All functions are pure and operate on plain floats; energies are in MeV,
lengths in metres, rates in 1/s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .constants import Constants

SpeciesKind = Literal["endpoint", "line"]

# The linear path/mfp form is only used deep inside its validity range;
# beyond this fraction of the mean free path it is refused outright.
THIN_TARGET_LIMIT = 0.01


@dataclass(frozen=True)
class NeutrinoSpecies:
    reaction_label: str
    energy_mev: float  # endpoint or dominant-line value
    kind: SpeciesKind
    branch_note: str = ""

    def __post_init__(self) -> None:
        if not (math.isfinite(self.energy_mev) and self.energy_mev > 0.0):
            raise ValueError(f"energy_mev must be > 0, got {self.energy_mev!r}")
        if self.kind not in ("endpoint", "line"):
            raise ValueError(f"kind must be 'endpoint' or 'line', got {self.kind!r}")


@dataclass(frozen=True)
class NeutrinoModel:
    species: tuple[NeutrinoSpecies, ...]
    mean_energy_mev: float
    flux_per_m2_s: float
    mean_free_path_m: float

    def __post_init__(self) -> None:
        for name in ("mean_energy_mev", "flux_per_m2_s", "mean_free_path_m"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise ValueError(f"{name} must be > 0, got {v!r}")


def pp_chain_species() -> tuple[NeutrinoSpecies, ...]:
    """The five fusion-chain neutrino sources with their energies in MeV."""
    return (
        NeutrinoSpecies("p + p -> 2H + e+ + nu_e", 0.42, "endpoint",
                        "dominant flux contribution"),
        NeutrinoSpecies("p + e- + p -> 2H + nu_e", 1.44, "line", "pep line"),
        NeutrinoSpecies("7Be + e- -> 7Li + nu_e", 0.86, "line",
                        "90 % branch; a 0.38 MeV line carries the remaining 10 %"),
        NeutrinoSpecies("8B -> 8Be + e+ + nu_e", 15.0, "endpoint",
                        "small fraction of the total flux"),
        NeutrinoSpecies("3He + p -> 4He + e+ + nu_e", 18.8, "endpoint",
                        "hep; small fraction of the total flux"),
    )


def solar_neutrino_model(constants: Constants) -> NeutrinoModel:
    """Mean 0.5 MeV source with the profile's flux and a 1000 ly mean free path.

    The mean free path is the rough lead value, reused unchanged for lunar
    rock; no composition model is attempted.
    """
    return NeutrinoModel(
        species=pp_chain_species(),
        mean_energy_mev=0.5,
        flux_per_m2_s=constants.solar_neutrino_flux,
        mean_free_path_m=1000.0 * constants.ly,
    )


def de_broglie_wavelength(energy_mev: float, constants: Constants) -> float:
    """lambda = h c / E for an ultra-relativistic particle of energy E [MeV]."""
    if not (math.isfinite(energy_mev) and energy_mev > 0.0):
        raise ValueError(f"energy must be > 0 MeV, got {energy_mev!r}")
    energy_joule = energy_mev * 1e6 * constants.eV
    return constants.h * constants.c / energy_joule


def interaction_fraction(path_m: float, mean_free_path_m: float) -> float:
    """Fraction path/mfp of particles interacting along a path [thin target].

    Valid only for path << mfp; refused beyond 1 % of the mean free path,
    where 1 - exp(-path/mfp) would start to deviate.
    """
    if not (math.isfinite(path_m) and path_m >= 0.0):
        raise ValueError(f"path must be >= 0, got {path_m!r}")
    if not (math.isfinite(mean_free_path_m) and mean_free_path_m > 0.0):
        raise ValueError(f"mean free path must be > 0, got {mean_free_path_m!r}")
    if path_m > THIN_TARGET_LIMIT * mean_free_path_m:
        raise ValueError(
            f"thin-target linearization invalid: path {path_m!r} m exceeds "
            f"{THIN_TARGET_LIMIT:.0%} of the mean free path {mean_free_path_m!r} m"
        )
    return path_m / mean_free_path_m


def total_pass_rate(flux_per_m2_s: float, disc_radius_m: float) -> float:
    """Rate of particles crossing a disc of the given radius: flux * pi * R^2."""
    if not (math.isfinite(flux_per_m2_s) and flux_per_m2_s > 0.0):
        raise ValueError(f"flux must be > 0, got {flux_per_m2_s!r}")
    if not (math.isfinite(disc_radius_m) and disc_radius_m > 0.0):
        raise ValueError(f"disc radius must be > 0, got {disc_radius_m!r}")
    return flux_per_m2_s * math.pi * disc_radius_m**2


def diffracted_rate(alpha: float, flux_per_m2_s: float, disc_radius_m: float) -> float:
    """Rate of interacting (hence diffracting) particles: alpha * flux * pi * R^2."""
    if not (math.isfinite(alpha) and 0.0 <= alpha <= 1.0):
        raise ValueError(f"alpha must lie in [0, 1], got {alpha!r}")
    return alpha * total_pass_rate(flux_per_m2_s, disc_radius_m)


def arago_contrast(alpha: float) -> float:
    """Central-spot contrast against the undiffracted background.

    The diffracted central intensity rides on a background of relative
    magnitude 1/alpha, so the observable contrast equals alpha itself.
    """
    if not (math.isfinite(alpha) and 0.0 <= alpha <= 1.0):
        raise ValueError(f"alpha must lie in [0, 1], got {alpha!r}")
    return alpha
