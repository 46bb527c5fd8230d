"""Physical constants in Gaussian CGS with named presets.

All internal computation in this package is Gaussian CGS (statvolt/cm for
fields, esu for charge, erg for energy); SI shows up only through the explicit
conversion helpers below.  Two presets are provided:

* ``modern``          - reference-table values (e, m_e, c),
* ``historical1934``  - electron charge as tabulated in the mid-1930s
                        (e = 4.770e-10 esu), under which the classic pair
                        r0 = 2.28e-13 cm, E0 = e/r0^2 = 9.18e15 statvolt/cm
                        closes to better than 0.5%.  m_e and c stay modern,
                        since only charge-driven numbers are affected.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import ConfigurationError

# Tabulated historical values for the point-charge soliton: effective radius
# and the corresponding limiting field E0 = e/r0^2.
R0_HISTORICAL_CM = 2.28e-13
E0_HISTORICAL_ESU = 9.18e15

# statvolt/cm -> V/m.  Exact Gaussian->SI rule: multiply by c[cm/s] * 1e-6.
STATVOLT_PER_CM_TO_V_PER_M = 2.9979e4

ENV_PRESET_VAR = "NLED_CONSTANTS_PRESET"


@dataclass(frozen=True)
class PhysicalConstants:
    """Electron charge (esu), mass (g) and speed of light (cm/s)."""

    e: float
    m_e: float
    c: float
    preset_name: str

    def __post_init__(self):
        if not (self.e > 0 and self.m_e > 0 and self.c > 0):
            raise ConfigurationError(
                "physical constants must be strictly positive",
                e=self.e, m_e=self.m_e, c=self.c,
            )


_PRESETS = {
    "modern": PhysicalConstants(
        e=4.8032e-10, m_e=9.1094e-28, c=2.9979e10, preset_name="modern"),
    "historical1934": PhysicalConstants(
        e=4.77e-10, m_e=9.1094e-28, c=2.9979e10, preset_name="historical1934"),
}


def constants(preset: str = "modern") -> PhysicalConstants:
    """Return the constant set for a preset label.

    Raises ConfigurationError for unknown labels.
    """
    try:
        return _PRESETS[preset]
    except KeyError:
        raise ConfigurationError(
            f"unknown constants preset {preset!r}; "
            f"choose one of {sorted(_PRESETS)}",
            preset=preset,
        ) from None


def preset_from_environment(default: str = "modern") -> str:
    """Preset label from $NLED_CONSTANTS_PRESET, or ``default`` if unset."""
    return os.environ.get(ENV_PRESET_VAR, default)


def statvolt_per_cm_to_volt_per_m(x: float) -> float:
    """Convert a field strength from statvolt/cm (esu) to V/m."""
    return x * STATVOLT_PER_CM_TO_V_PER_M


def classical_electron_radius(k: PhysicalConstants) -> float:
    """r_e = e^2 / (m_e c^2) in cm."""
    return k.e**2 / (k.m_e * k.c**2)
