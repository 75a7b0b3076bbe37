"""Physical constants profiles and dimension-tagged scalars.

Two immutable profiles are provided:

* ``"codata"`` -- full-precision reference values (exact SI definitions
  where they exist, recommended values otherwise).
* ``"paper"`` -- aggressively rounded order-of-magnitude values used by the
  reproduction pipeline, so that golden numbers come out of the same
  back-of-envelope arithmetic they were first produced with.  Note that in
  this profile ``h`` and ``hbar`` are rounded *independently*
  (h = 7e-34, hbar = 1e-34), so h = 2*pi*hbar deliberately does not hold
  there; the "codata" profile satisfies it to machine precision.

Both profiles use 1 ly = 9.4607e15 m.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, fields


class DimensionError(ValueError):
    """Arithmetic attempted across mismatched dimension tags."""


class Unit(enum.Enum):
    LENGTH = "length"
    TIME = "time"
    ENERGY = "energy"
    MOMENTUM = "momentum"
    RATE = "rate"
    DIMENSIONLESS = "dimensionless"


@dataclass(frozen=True)
class Quantity:
    """A scalar tagged with one of the six supported dimensions.

    Addition, subtraction and comparison require matching tags; scaling by
    a plain number is always allowed.  This is deliberately not a general
    unit-algebra system.
    """

    value: float
    unit: Unit

    def _require_same_unit(self, other: "Quantity") -> None:
        if not isinstance(other, Quantity):
            raise DimensionError(f"expected a Quantity, got {type(other).__name__}")
        if other.unit is not self.unit:
            raise DimensionError(
                f"dimension mismatch: {self.unit.value} vs {other.unit.value}"
            )

    def __add__(self, other: "Quantity") -> "Quantity":
        self._require_same_unit(other)
        return Quantity(self.value + other.value, self.unit)

    def __sub__(self, other: "Quantity") -> "Quantity":
        self._require_same_unit(other)
        return Quantity(self.value - other.value, self.unit)

    def __neg__(self) -> "Quantity":
        return Quantity(-self.value, self.unit)

    def __mul__(self, scalar: float) -> "Quantity":
        if isinstance(scalar, Quantity):
            raise DimensionError("multiplying two Quantities is not supported")
        return Quantity(self.value * float(scalar), self.unit)

    __rmul__ = __mul__

    def __truediv__(self, scalar: float) -> "Quantity":
        if isinstance(scalar, Quantity):
            raise DimensionError("dividing two Quantities is not supported")
        return Quantity(self.value / float(scalar), self.unit)

    def __lt__(self, other: "Quantity") -> bool:
        self._require_same_unit(other)
        return self.value < other.value


@dataclass(frozen=True)
class Constants:
    """Immutable set of physical constants; safe to share across threads."""

    profile: str
    h: float                    # Planck constant, J s
    hbar: float                 # reduced Planck constant, J s
    c: float                    # speed of light, m/s
    eV: float                   # joules per electronvolt
    ly: float                   # metres per light year
    moon_mass: float            # kg
    moon_radius: float          # m
    earth_moon_distance: float  # m
    solar_neutrino_flux: float  # 1/(m^2 s)

    def __post_init__(self) -> None:
        for f in fields(self):
            if f.name == "profile":
                continue
            v = getattr(self, f.name)
            if not (isinstance(v, float) and math.isfinite(v) and v > 0.0):
                raise ValueError(f"constant {f.name} must be finite and > 0, got {v!r}")

    def numeric_fields(self) -> dict[str, float]:
        return {
            f.name: getattr(self, f.name) for f in fields(self) if f.name != "profile"
        }


_CODATA_H = 6.62607015e-34  # exact SI definition

_PROFILES: dict[str, Constants] = {
    "codata": Constants(
        profile="codata",
        h=_CODATA_H,
        hbar=_CODATA_H / (2.0 * math.pi),
        c=299792458.0,
        eV=1.602176634e-19,
        ly=9.4607e15,
        moon_mass=7.342e22,
        moon_radius=1.7374e6,
        earth_moon_distance=3.844e8,
        solar_neutrino_flux=6.5e14,
    ),
    # Order-of-magnitude profile: every value is a one- or two-digit
    # rounding, including h and hbar independently of each other.
    "paper": Constants(
        profile="paper",
        h=7e-34,
        hbar=1e-34,
        c=3e8,
        eV=1.6e-19,
        ly=9.4607e15,
        moon_mass=7e22,
        moon_radius=1.7e6,
        earth_moon_distance=4e8,
        solar_neutrino_flux=7e14,
    ),
}

PROFILE_NAMES = tuple(sorted(_PROFILES))


def constants_profile(name: str = "paper") -> Constants:
    """Return the named constants profile ("paper" or "codata")."""
    try:
        return _PROFILES[name]
    except KeyError:
        raise ValueError(
            f"unknown constants profile {name!r}; expected one of {PROFILE_NAMES}"
        ) from None
