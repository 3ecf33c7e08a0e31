"""Analytic ro-vibrational spectrum of the Morse oscillator.

The centrifugal barrier is replaced by its Pekeris surrogate, after which the
substitution s = exp(-alpha x) turns the radial equation into

    R'' + R'/s + (-eps1^2 + eps2 s - eps3 s^2) / s^2 R = 0,

a hypergeometric-type equation with sigma = s, tau_tilde = 1.  The NU
quantization gives eps1 = eps2 / (2 sqrt(eps3)) - (n + 1/2), and the radial
functions are nu^eps1 exp(-nu/2) L_n^(2 eps1)(nu) with nu = 2 sqrt(eps3) s.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy import integrate
from scipy.special import gammaln

from . import nu
from .potential import MoleculeParams, PekerisCoefficients, pekeris_coefficients
from .units import HBAR2


class UnboundStateError(ValueError):
    """Requested (n, l) has no bound level under the Pekeris model."""

    def __init__(self, message, n_max=None):
        super().__init__(message)
        self.n_max = n_max


@dataclass(frozen=True)
class DimensionlessParams:
    """Energy-independent part of the reduced equation for one l.

    ``scale`` is hbar^2 alpha^2 / (2 mu r0^2) = hbar^2 a^2 / (2 mu), the
    energy unit converting the eps parameters back to eV.
    """

    eps2: float
    eps3: float
    alpha: float
    gamma: float
    scale: float
    pekeris: PekerisCoefficients

    @property
    def center(self) -> float:
        """eps2 / (2 sqrt(eps3)); eps1 of level n is center - (n + 1/2)."""
        return self.eps2 / (2.0 * math.sqrt(self.eps3))

    def eps1(self, energy: float) -> float:
        """eps1 >= 0 for a given (bound) energy."""
        value = (self.gamma * self.pekeris.D0 - energy) / self.scale
        if value < 0:
            raise ValueError("energy above gamma*D0 is not bound")
        return math.sqrt(value)

    def problem(self, eps1: float) -> nu.NuProblem:
        """The hypergeometric-type equation for a given eps1."""
        return nu.NuProblem(
            sigma=nu.Poly2(0.0, 1.0, 0.0),
            sigma_tilde=nu.Poly2(-eps1 * eps1, self.eps2, -self.eps3),
            tau_tilde=nu.Poly2(1.0, 0.0, 0.0),
        )


@dataclass(frozen=True)
class EnergyLevel:
    n: int
    l: int
    energy: float
    eps1: float


def dimensionless_params(p: MoleculeParams, l: int) -> DimensionlessParams:
    """eps2, eps3 and the Pekeris data for rotational quantum number ``l``."""
    if l < 0:
        raise ValueError(f"l must be non-negative, got {l}")
    c = pekeris_coefficients(p, l)
    scale = HBAR2 * p.a * p.a / (2.0 * p.mu)
    eps2 = (2.0 * p.D - c.gamma * c.D1) / scale
    eps3 = (p.D + c.gamma * c.D2) / scale
    if not eps3 > 0:
        raise UnboundStateError(f"no bound spectrum at l={l}: eps3 = {eps3:g} <= 0")
    return DimensionlessParams(eps2=eps2, eps3=eps3, alpha=c.alpha, gamma=c.gamma, scale=scale, pekeris=c)


def max_bound_n(p: MoleculeParams, l: int) -> int:
    """Largest n with eps2/(2 sqrt(eps3)) - (n + 1/2) > 0."""
    return _max_bound_n(dimensionless_params(p, l).center, l)


def _max_bound_n(center: float, l: int) -> int:
    top = center - 0.5
    if top <= 0:
        raise UnboundStateError(f"no bound state at l={l}")
    n_max = math.floor(top)
    if n_max == top:
        n_max -= 1
    return n_max


def energy_level(p: MoleculeParams, n: int, l: int) -> EnergyLevel:
    """Bound-state energy E_nl (eV) of the Pekeris-approximated problem."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    dp = dimensionless_params(p, l)
    eps1 = dp.center - (n + 0.5)
    if not eps1 > 0:
        try:
            n_max = _max_bound_n(dp.center, l)
        except UnboundStateError:
            raise UnboundStateError(f"state n={n}, l={l} not bound: no bound state at this l") from None
        raise UnboundStateError(f"state n={n}, l={l} not bound: n_max={n_max}", n_max=n_max)
    energy = dp.gamma * dp.pekeris.D0 - dp.scale * eps1 * eps1
    return EnergyLevel(n=n, l=l, energy=energy, eps1=eps1)


def morse_closed_form(p: MoleculeParams, n):
    """Rotationless Morse energies -D + hbar a sqrt(2D/mu)(n+1/2) - hbar^2 a^2 (n+1/2)^2/(2 mu)."""
    v = np.asarray(n, dtype=float) + 0.5
    return -p.D + math.sqrt(HBAR2 * 2.0 * p.D / p.mu) * p.a * v - HBAR2 * p.a**2 / (2.0 * p.mu) * v * v


def admissible_branch(p: MoleculeParams, level: EnergyLevel) -> tuple[nu.NuBranch, nu.NuProblem]:
    prob = dimensionless_params(p, level.l).problem(level.eps1)
    (branch,) = nu.admissible_branches(prob)
    return branch, prob


def laguerre(n: int, alpha_order: float, x):
    """Generalized Laguerre polynomial L_n^alpha(x) by three-term recurrence."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if not alpha_order > -1:
        raise ValueError(f"alpha_order must exceed -1, got {alpha_order}")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev if prev.ndim else float(prev)
    cur = 1.0 + alpha_order - x
    for k in range(2, n + 1):
        prev, cur = cur, ((2 * k - 1 + alpha_order - x) * cur - (k - 1 + alpha_order) * prev) / k
    return cur if cur.ndim else float(cur)


def _log_gamma_factorial(x: float) -> float:
    # x! = Gamma(x + 1); poles at negative integers
    if x < 0 and float(x).is_integer():
        raise ValueError(f"factorial of negative integer {x}")
    return float(gammaln(x + 1.0))


def log_normalization_exact(p: MoleculeParams, n: int, l: int) -> float:
    """ln A from Laguerre orthogonality, for R = A (2 sqrt(eps3))^-eps1 nu^eps1 e^(-nu/2) L_n^(2 eps1).

    Uses int_0^inf x^(b-1) e^-x [L_n^b(x)]^2 dx = Gamma(n+b+1) / (n! b) with
    b = 2 eps1 and dr = dnu / (a nu), treating nu as ranging over (0, inf).
    """
    level = energy_level(p, n, l)
    dp = dimensionless_params(p, l)
    b = 2.0 * level.eps1
    log_a2 = (
        math.log(p.a) + math.lgamma(n + 1) + math.log(b) + b * math.log(2.0 * math.sqrt(dp.eps3)) - math.lgamma(n + b + 1)
    )
    return 0.5 * log_a2


def normalization_constant_closed_form(p: MoleculeParams, n: int, l: int) -> float:
    """Closed-form A_nl = sqrt(4 a n! (1+n+eps1)^2 (2 sqrt(eps3))^(2 eps1) / (1+n+2 eps1)!).

    Non-integer factorials are read as Gamma(x + 1).  Kept as a diagnostic;
    the wavefunctions are normalized by quadrature.
    """
    return math.exp(log_normalization_closed_form(p, n, l))


def log_normalization_closed_form(p: MoleculeParams, n: int, l: int) -> float:
    level = energy_level(p, n, l)
    dp = dimensionless_params(p, l)
    e1 = level.eps1
    log_a2 = (
        math.log(4.0 * p.a)
        + _log_gamma_factorial(n)
        + 2.0 * math.log(1.0 + n + e1)
        + 2.0 * e1 * math.log(2.0 * math.sqrt(dp.eps3))
        - _log_gamma_factorial(1.0 + n + 2.0 * e1)
    )
    return 0.5 * log_a2


@dataclass(frozen=True)
class RadialWavefunction:
    """Normalized R_nl(r); call it with r in Angstrom.

    ``log_norm`` is ln A in the convention
    R = A (2 sqrt(eps3))^-eps1 nu^eps1 exp(-nu/2) L_n^order(nu).
    """

    level: EnergyLevel
    params: MoleculeParams
    eps3: float
    laguerre_order: float
    log_norm: float
    evaluator: Callable = field(repr=False, compare=False)

    @property
    def norm(self) -> float:
        return math.exp(self.log_norm)

    def __call__(self, r):
        return self.evaluator(r)

    def nu(self, r):
        """nu = 2 sqrt(eps3) exp(-a (r - r0))."""
        return 2.0 * math.sqrt(self.eps3) * np.exp(-self.params.a * (np.asarray(r, dtype=float) - self.params.r0))


def _shape(p: MoleculeParams, eps1: float, eps3: float, n: int, order: float):
    """Unnormalized R and the log offset it was divided by."""
    two_root = 2.0 * math.sqrt(eps3)
    # ln of (2 sqrt(eps3))^-eps1 nu^eps1 e^-nu/2 at its peak nu = 2 eps1
    offset = -eps1 * math.log(two_root) + eps1 * math.log(2.0 * eps1) - eps1

    def shape(r):
        r = np.asarray(r, dtype=float)
        t = -p.a * (r - p.r0)
        v = two_root * np.exp(t)
        # ln((2 sqrt(eps3))^-eps1 nu^eps1) = eps1 * t
        return np.exp(eps1 * t - 0.5 * v - offset) * laguerre(n, order, v)

    return shape, offset


def integration_breakpoints(p: MoleculeParams, eps1: float, eps3: float, n: int) -> np.ndarray:
    """r values bracketing where a level's density lives, for quadrature panels."""
    two_root = 2.0 * math.sqrt(eps3)
    b = 2.0 * eps1
    # nu-density nu^(b-1) e^-nu L^2 sits within a few sqrt(b + 2n) of b + 2n
    center = b + 2.0 * n
    width = math.sqrt(center + 1.0)
    nus = center + width * np.linspace(-12.0, 12.0, 25 + 2 * n)
    nus = nus[nus > 0]
    r = p.r0 - np.log(nus / two_root) / p.a
    return np.sort(r)


def radial_wavefunction(
    p: MoleculeParams,
    n: int,
    l: int,
    *,
    laguerre_order: float | None = None,
    epsabs: float = 1e-10,
) -> RadialWavefunction:
    """Normalized radial function of level (n, l).

    The Laguerre order defaults to the weight-function power found by solving
    (sigma rho)' = tau rho on the admissible NU branch, i.e. 2 eps1.  The
    normalization is by adaptive quadrature over 0 < r < r0 + 30/a.
    """
    level = energy_level(p, n, l)
    dp = dimensionless_params(p, l)
    if laguerre_order is None:
        branch, prob = admissible_branch(p, level)
        laguerre_order = nu.weight_function_exponents(branch, prob).power
    shape, offset = _shape(p, level.eps1, dp.eps3, n, laguerre_order)

    r_max = p.r0 + 30.0 / p.a
    pts = integration_breakpoints(p, level.eps1, dp.eps3, n)
    pts = pts[(pts > 0) & (pts < r_max)]
    edges = np.concatenate([[0.0], pts, [r_max]])
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        val, _ = integrate.quad(lambda r: shape(r) ** 2, lo, hi, epsabs=epsabs, epsrel=1e-12, limit=200)
        total += val
    log_scale = -0.5 * math.log(total)

    def evaluator(r):
        return math.exp(log_scale) * shape(r)

    return RadialWavefunction(
        level=level,
        params=p,
        eps3=dp.eps3,
        laguerre_order=float(laguerre_order),
        log_norm=log_scale - offset,
        evaluator=evaluator,
    )


def count_nodes(values) -> int:
    """Sign changes in a sampled function, ignoring exact zeros."""
    v = np.asarray(values, dtype=float)
    v = v[v != 0]
    return int(np.count_nonzero(np.signbit(v[1:]) != np.signbit(v[:-1])))
