"""Nikiforov-Uvarov reduction of hypergeometric-type equations.

The equation handled is

    psi'' + (tau_t / sigma) psi' + (sigma_t / sigma^2) psi = 0

with ``sigma`` and ``sigma_t`` polynomials of degree <= 2 and ``tau_t`` of
degree <= 1.  Writing psi = phi(s) y(s) with phi'/phi = pi/sigma turns it into
sigma y'' + tau y' + lambda y = 0, which has polynomial solutions of degree n
when lambda = -n tau' - n(n-1)/2 sigma''.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

DISCRIMINANT_RTOL = 1e-10


@dataclass(frozen=True)
class Poly2:
    """Real polynomial c0 + c1 s + c2 s^2."""

    c0: float = 0.0
    c1: float = 0.0
    c2: float = 0.0

    def __add__(self, other):
        if not isinstance(other, Poly2):
            return NotImplemented
        return Poly2(self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other):
        if not isinstance(other, Poly2):
            return NotImplemented
        return Poly2(self.c0 - other.c0, self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self):
        return Poly2(-self.c0, -self.c1, -self.c2)

    def __mul__(self, k):
        if isinstance(k, Poly2):
            return NotImplemented
        return Poly2(k * self.c0, k * self.c1, k * self.c2)

    __rmul__ = __mul__

    def __call__(self, s):
        return self.c0 + s * (self.c1 + s * self.c2)

    @property
    def coeffs(self):
        return (self.c0, self.c1, self.c2)

    @property
    def degree(self) -> int:
        """Index of the highest nonzero coefficient; -1 for the zero polynomial."""
        for i in (2, 1, 0):
            if self.coeffs[i] != 0:
                return i
        return -1

    def deriv(self) -> "Poly2":
        return Poly2(self.c1, 2.0 * self.c2, 0.0)

    def square(self) -> "Poly2":
        """Square of a polynomial of degree <= 1."""
        if self.c2 != 0:
            raise ValueError("square() needs degree <= 1")
        return Poly2(self.c0 * self.c0, 2.0 * self.c0 * self.c1, self.c1 * self.c1)


@dataclass(frozen=True)
class NuProblem:
    sigma: Poly2
    sigma_tilde: Poly2
    tau_tilde: Poly2

    def __post_init__(self):
        if self.sigma.degree < 0:
            raise ValueError("sigma must be nonzero")
        if self.tau_tilde.degree > 1:
            raise ValueError("tau_tilde must have degree <= 1")

    def shift(self) -> Poly2:
        """(sigma' - tau_tilde) / 2, the polynomial part of pi."""
        return 0.5 * (self.sigma.deriv() - self.tau_tilde)

    def radicand(self, k: float) -> Poly2:
        """Quadratic under the square root in pi for a given k."""
        return self.shift().square() - self.sigma_tilde + k * self.sigma


@dataclass(frozen=True)
class NuBranch:
    """One (k, sign) choice for pi.

    ``admissible`` requires tau' < 0 and that phi = exp(int pi/sigma) stays
    bounded at every real zero of sigma.
    """

    k: float
    sign: int
    pi_poly: Poly2
    tau: Poly2
    lam: float
    tau_decreasing: bool
    regular: bool

    @property
    def admissible(self) -> bool:
        return self.tau_decreasing and self.regular


class WeightExponents(NamedTuple):
    """rho(s) = s**power * exp(rate * s)."""

    power: float
    rate: float

    @property
    def is_degenerate(self) -> bool:
        # no exponential decay: rho is not integrable on (0, inf)
        return self.rate >= 0


def perfect_square_residual(p: NuProblem, k: float) -> float:
    """Discriminant of the radicand at ``k``, relative to its rounding scale.

    The scale uses coefficient magnitudes before cancellation, so a k that is
    exact up to rounding gives a residual near machine epsilon.
    """
    q = p.radicand(k)
    a = p.shift().square() - p.sigma_tilde
    m0, m1, m2 = (abs(ai) + abs(k * si) for ai, si in zip(a.coeffs, p.sigma.coeffs))
    disc = q.c1 * q.c1 - 4.0 * q.c2 * q.c0
    scale = max(m1 * m1, 4.0 * m2 * m0, 1e-300)
    return abs(disc) / scale


def _is_perfect_square(p: NuProblem, k: float) -> bool:
    q = p.radicand(k)
    if q.c2 < 0 or (q.c2 == 0 and q.c0 < 0):
        return False
    return perfect_square_residual(p, k) <= DISCRIMINANT_RTOL


def k_candidates(p: NuProblem) -> list[float]:
    """Real k for which the radicand is the square of a polynomial.

    Raises
    ------
    ValueError
        If no real k exists.
    """
    a = p.shift().square() - p.sigma_tilde
    s = p.sigma
    # radicand coefficients are a_i + k s_i; discriminant in k is c2 k^2 + c1 k + c0
    if a.c2 == 0 and s.c2 == 0:
        # radicand at most linear in s: needs a vanishing linear term
        if s.c1 == 0:
            ks = [0.0] if a.c1 == 0 else []
        else:
            ks = [-a.c1 / s.c1]
    else:
        c2 = s.c1 * s.c1 - 4.0 * s.c2 * s.c0
        c1 = 2.0 * a.c1 * s.c1 - 4.0 * (a.c2 * s.c0 + s.c2 * a.c0)
        c0 = a.c1 * a.c1 - 4.0 * a.c2 * a.c0
        if c2 == 0:
            if c1 == 0:
                ks = [0.0] if c0 == 0 else []
            else:
                ks = [-c0 / c1]
        else:
            # c1^2 - 4 c2 c0 regrouped so the a1^2 s1^2 terms cancel exactly
            disc = 16.0 * (
                (a.c2 * s.c0 - s.c2 * a.c0) ** 2
                - a.c1 * s.c1 * (a.c2 * s.c0 + s.c2 * a.c0)
                + s.c1 * s.c1 * a.c2 * a.c0
                + s.c2 * s.c0 * a.c1 * a.c1
            )
            if disc < 0:
                if disc < -DISCRIMINANT_RTOL * c1 * c1:
                    ks = []
                else:
                    ks = [-c1 / (2.0 * c2)]
            else:
                root = math.sqrt(disc)
                ks = sorted({(-c1 - root) / (2.0 * c2), (-c1 + root) / (2.0 * c2)})
    ks = [k for k in ks if _is_perfect_square(p, k)]
    if not ks:
        raise ValueError("no perfect-square root: no real k makes the radicand a square")
    return ks


def _sqrt_poly(q: Poly2) -> Poly2:
    if q.c2 > 0:
        r2 = math.sqrt(q.c2)
        return Poly2(q.c1 / (2.0 * r2), r2, 0.0)
    return Poly2(math.sqrt(max(q.c0, 0.0)), 0.0, 0.0)


def _sigma_roots(sigma: Poly2) -> list[float]:
    c0, c1, c2 = sigma.coeffs
    if c2 == 0:
        return [] if c1 == 0 else [-c0 / c1]
    disc = c1 * c1 - 4.0 * c2 * c0
    if disc < 0:
        return []
    root = math.sqrt(disc)
    return [(-c1 - root) / (2.0 * c2), (-c1 + root) / (2.0 * c2)]


def _regular(pi_poly: Poly2, sigma: Poly2) -> bool:
    # near a simple zero s0 of sigma, phi ~ (s - s0)**(pi(s0) / sigma'(s0))
    dsigma = sigma.deriv()
    for s0 in _sigma_roots(sigma):
        slope = dsigma(s0)
        if slope == 0:
            continue
        if pi_poly(s0) / slope < 0:
            return False
    return True


def all_branches(p: NuProblem) -> list[NuBranch]:
    """Every (k, sign) branch, admissible or not."""
    shift = p.shift()
    branches = []
    for k in k_candidates(p):
        root = _sqrt_poly(p.radicand(k))
        for sign in (+1, -1):
            pi_poly = shift + sign * root
            tau = p.tau_tilde + 2.0 * pi_poly
            branches.append(
                NuBranch(
                    k=k,
                    sign=sign,
                    pi_poly=pi_poly,
                    tau=tau,
                    lam=k + pi_poly.c1,
                    tau_decreasing=tau.c1 < 0,
                    regular=_regular(pi_poly, p.sigma),
                )
            )
    return branches


def resolve_branches(p: NuProblem) -> list[NuBranch]:
    """All branches with the admissible ones flagged.

    Raises
    ------
    ValueError
        If none of them is admissible.
    """
    branches = all_branches(p)
    if not any(b.admissible for b in branches):
        raise ValueError("no negative-derivative branch")
    return branches


def admissible_branches(p: NuProblem) -> list[NuBranch]:
    return [b for b in resolve_branches(p) if b.admissible]


def quantization(branch: NuBranch, p: NuProblem, n: int) -> float:
    """lambda_n = -n tau' - n(n-1)/2 sigma''."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return -n * branch.tau.c1 - 0.5 * n * (n - 1) * (2.0 * p.sigma.c2)


def weight_function_exponents(branch: NuBranch, p: NuProblem) -> WeightExponents:
    """Solve (sigma rho)' = tau rho for sigma = s.

    With sigma = s the equation reads rho'/rho = (tau(s) - 1)/s, so
    rho = s**(tau(0) - 1) * exp(tau' s).
    """
    if p.sigma != Poly2(0.0, 1.0, 0.0):
        raise NotImplementedError("weight function only implemented for sigma(s) = s")
    return WeightExponents(power=branch.tau.c0 - 1.0, rate=branch.tau.c1)
