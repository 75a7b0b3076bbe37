"""Momentum-kick model for a body whose position is observed repeatedly.

A single observation with position precision delta_x imparts a minimum
momentum uncertainty hbar/delta_x (the bound is used with hbar, not the
textbook hbar/2, matching the order-of-magnitude convention of the rest
of the chain).  N observations accumulate either as an isotropic random
walk, sqrt(N) * delta_p, or fully aligned, N * delta_p.

Probabilities of N independent kicks all falling inside a given angular
sector live permanently in log10 space; the linear values underflow any
floating-point representation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .constants import Constants

AccumulationMode = Literal["random_walk", "coherent"]
ACCUMULATION_MODES = ("random_walk", "coherent")


@dataclass(frozen=True)
class KickAccumulation:
    """Inputs of one accumulation: precision, event count, mode and kicked mass.

    n_events is real-valued so that rate * time products can be used
    directly.
    """

    delta_x_m: float
    n_events: float
    mode: AccumulationMode
    mass_kg: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.delta_x_m) and self.delta_x_m > 0.0):
            raise ValueError(f"delta_x_m must be > 0, got {self.delta_x_m!r}")
        if not (math.isfinite(self.n_events) and self.n_events >= 0.0):
            raise ValueError(f"n_events must be >= 0, got {self.n_events!r}")
        if self.mode not in ACCUMULATION_MODES:
            raise ValueError(
                f"mode must be one of {ACCUMULATION_MODES}, got {self.mode!r}"
            )
        if not (math.isfinite(self.mass_kg) and self.mass_kg > 0.0):
            raise ValueError(f"mass_kg must be > 0, got {self.mass_kg!r}")


def heisenberg_kick(delta_x_m: float, constants: Constants) -> float:
    """Minimum per-observation momentum change hbar / delta_x [kg m/s]."""
    if not (math.isfinite(delta_x_m) and delta_x_m > 0.0):
        raise ValueError(f"delta_x must be > 0, got {delta_x_m!r}")
    return constants.hbar / delta_x_m


def accumulate(acc: KickAccumulation, constants: Constants) -> float:
    """Total momentum change of n_events kicks in the given mode [kg m/s]."""
    kick = heisenberg_kick(acc.delta_x_m, constants)
    if acc.mode == "random_walk":
        return math.sqrt(acc.n_events) * kick
    return acc.n_events * kick


def velocity_change(delta_p_kgms: float, mass_kg: float) -> float:
    """Velocity change delta_p / M [m/s]."""
    if not math.isfinite(delta_p_kgms):
        raise ValueError(f"delta_p must be finite, got {delta_p_kgms!r}")
    if not (math.isfinite(mass_kg) and mass_kg > 0.0):
        raise ValueError(f"mass must be > 0, got {mass_kg!r}")
    return delta_p_kgms / mass_kg


def sector_probability(phi_rad: float) -> float:
    """Probability that an isotropic direction falls within angle phi of an axis.

    Spherical-cap area fraction (1 - cos phi) / 2 for phi in [0, pi].
    """
    if not (math.isfinite(phi_rad) and 0.0 <= phi_rad <= math.pi):
        raise ValueError(f"phi must lie in [0, pi], got {phi_rad!r}")
    return 0.5 * (1.0 - math.cos(phi_rad))


def aligned_log10_probability(n_events: float, p_single: float) -> float:
    """log10 of the probability that all n_events directions share one sector.

    Returns n_events * log10(p_single).  The linear value (10 to this
    power) underflows any float for the regimes of interest, so only the
    log-space form exists.  p_single = 0 with n_events > 0 returns -inf as
    a documented sentinel for an impossible event.
    """
    if not (math.isfinite(n_events) and n_events >= 0.0):
        raise ValueError(f"n_events must be >= 0, got {n_events!r}")
    if not (math.isfinite(p_single) and 0.0 <= p_single <= 1.0):
        raise ValueError(f"p_single must lie in [0, 1], got {p_single!r}")
    if n_events == 0.0:
        return 0.0
    if p_single == 0.0:
        return float("-inf")
    return n_events * math.log10(p_single)
