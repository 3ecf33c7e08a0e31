"""Molecule parameters, the Morse well and the Pekeris centrifugal surrogate."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .units import cm1_to_ev, rotational_unit


@dataclass(frozen=True)
class MoleculeParams:
    """Morse description of a diatomic molecule.

    Attributes
    ----------
    name : str
        Free-form label.
    D : float
        Dissociation energy (well depth), eV.
    a : float
        Width parameter, 1/Angstrom.
    r0 : float
        Equilibrium bond length, Angstrom.
    mu : float
        Reduced mass, amu.
    """

    name: str
    D: float
    a: float
    r0: float
    mu: float

    def __post_init__(self):
        for field in ("D", "a", "r0", "mu"):
            value = getattr(self, field)
            if not (np.isfinite(value) and value > 0):
                raise ValueError(f"{field} must be positive and finite, got {value!r}")

    @classmethod
    def from_wavenumber(cls, name, D_cm1, a, r0, mu):
        """Build from a well depth given in cm^-1."""
        return cls(name=name, D=float(cm1_to_ev(D_cm1)), a=float(a), r0=float(r0), mu=float(mu))

    @property
    def alpha(self) -> float:
        """Dimensionless product a * r0."""
        return self.a * self.r0

    def to_x(self, r):
        """Relative displacement x = (r - r0) / r0."""
        return (np.asarray(r, dtype=float) - self.r0) / self.r0

    def to_r(self, x):
        """Inverse of :meth:`to_x`."""
        return self.r0 * (1.0 + np.asarray(x, dtype=float))


# Table parameters for the two reference molecules.
CO = MoleculeParams.from_wavenumber("CO", 90540.0, 2.2994, 1.1283, 6.8606719)
LIH = MoleculeParams.from_wavenumber("LiH", 20287.0, 1.1280, 1.5956, 0.8801221)


@dataclass(frozen=True)
class PekerisCoefficients:
    """Three-exponential replacement of gamma / (1 + x)^2.

    ``gamma`` already contains the l(l+1) factor.
    """

    alpha: float
    gamma: float
    D0: float
    D1: float
    D2: float


def morse_potential(p: MoleculeParams, r):
    """D * (exp(-2a(r - r0)) - 2 exp(-a(r - r0))), in eV."""
    e = np.exp(-p.a * (np.asarray(r, dtype=float) - p.r0))
    return p.D * (e * e - 2.0 * e)


def centrifugal_potential(p: MoleculeParams, l: int, r):
    """Exact barrier hbar^2 l(l+1) / (2 mu r^2)."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ValueError("r must be positive")
    return rotational_unit(p.mu, 1.0) * l * (l + 1) / (r * r)


def effective_potential(p: MoleculeParams, l: int, r):
    """Morse well plus the exact 1/r^2 centrifugal barrier."""
    if l < 0:
        raise ValueError(f"l must be non-negative, got {l}")
    return morse_potential(p, r) + centrifugal_potential(p, l, r)


def pekeris_coefficients(p: MoleculeParams, l: int) -> PekerisCoefficients:
    """Expansion coefficients matching gamma/(1+x)^2 through second order in x."""
    if l < 0:
        raise ValueError(f"l must be non-negative, got {l}")
    alpha = p.alpha
    inv = 1.0 / alpha
    inv2 = inv * inv
    return PekerisCoefficients(
        alpha=alpha,
        gamma=rotational_unit(p.mu, p.r0) * l * (l + 1),
        D0=1.0 - 3.0 * inv + 3.0 * inv2,
        D1=4.0 * inv - 6.0 * inv2,
        D2=-inv + 3.0 * inv2,
    )


def pekeris_rotational_potential(c: PekerisCoefficients, x):
    """gamma * (D0 + D1 exp(-alpha x) + D2 exp(-2 alpha x))."""
    e = np.exp(-c.alpha * np.asarray(x, dtype=float))
    return c.gamma * (c.D0 + c.D1 * e + c.D2 * e * e)
