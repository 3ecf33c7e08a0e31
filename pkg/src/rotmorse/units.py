"""Physical constants and unit conversions.

Everything in the package works in one internal system: energies in eV,
lengths in Angstrom, masses in unified atomic mass units (amu).  Molecule
data arrives with the dissociation energy in cm^-1, so the only conversion
needed at ingestion is wavenumber -> eV.

Constants are CODATA 2018, pinned here rather than read from
``scipy.constants`` (whose CODATA vintage changes between releases).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

# CODATA 2018, SI
PLANCK = 6.62607015e-34  # J s (exact)
HBAR = PLANCK / (2.0 * math.pi)  # J s
SPEED_OF_LIGHT = 299792458.0  # m / s (exact)
ELEMENTARY_CHARGE = 1.602176634e-19  # C (exact)
ATOMIC_MASS = 1.66053906660e-27  # kg
ANGSTROM = 1e-10  # m


@dataclass(frozen=True)
class PhysicalConstants:
    """Derived constants in the internal (eV, Angstrom, amu) system.

    Attributes
    ----------
    hbar2_over_amu_A2 : float
        hbar^2 / (1 amu * 1 Angstrom^2), in eV.
    cm1_to_ev : float
        Energy of one wavenumber (h c * 1 cm^-1), in eV.
    """

    hbar2_over_amu_A2: float
    cm1_to_ev: float


CONSTANTS = PhysicalConstants(
    hbar2_over_amu_A2=HBAR**2 / (ATOMIC_MASS * ANGSTROM**2) / ELEMENTARY_CHARGE,
    cm1_to_ev=PLANCK * SPEED_OF_LIGHT * 100.0 / ELEMENTARY_CHARGE,
)

HBAR2 = CONSTANTS.hbar2_over_amu_A2


def cm1_to_ev(x):
    """Convert a wavenumber (cm^-1) to an energy in eV."""
    return x * CONSTANTS.cm1_to_ev


def ev_to_cm1(x):
    """Convert an energy in eV to a wavenumber in cm^-1."""
    return x / CONSTANTS.cm1_to_ev


def rotational_unit(mu: float, r0: float) -> float:
    """Rotational energy scale hbar^2 / (2 mu r0^2) in eV.

    Multiply by l(l+1) to get the centrifugal energy at ``r0``.

    Parameters
    ----------
    mu : float
        Reduced mass in amu.
    r0 : float
        Bond length in Angstrom.
    """
    if not mu > 0:
        raise ValueError(f"reduced mass must be positive, got {mu!r}")
    if not r0 > 0:
        raise ValueError(f"bond length must be positive, got {r0!r}")
    return HBAR2 / (2.0 * mu * r0 * r0)
