"""Numerov shooting solver for the exact rotating-Morse radial equation.

Solves u'' = (2 mu / hbar^2) (V(r) + hbar^2 l(l+1) / (2 mu r^2) - E) u with the
true 1/r^2 barrier, independently of the analytic Pekeris/NU route.  Levels
are bracketed by node counting (Sturm oscillation) and refined by bisection.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numba
import numpy as np
from scipy.integrate import simpson

from .potential import MoleculeParams, effective_potential
from .units import HBAR2

# start the outward sweep once h^2 f / 12 drops below this; deeper in the wall
# the solution is negligibly small and the recurrence would be unstable
_WALL_CUTOFF = 0.1
_RESCALE = 1e100


@dataclass(frozen=True)
class RadialGrid:
    r_min: float
    r_max: float
    step: float
    points: int

    def __post_init__(self):
        if not 0 < self.r_min < self.r_max:
            raise ValueError("need 0 < r_min < r_max")
        if self.points < 1000:
            raise ValueError(f"grid needs at least 1000 points, got {self.points}")

    @classmethod
    def from_step(cls, r_min, r_max, step):
        points = int(round((r_max - r_min) / step)) + 1
        # actual spacing so that the end points are hit exactly
        return cls(r_min, r_max, (r_max - r_min) / (points - 1), points)

    @property
    def r(self) -> np.ndarray:
        return np.linspace(self.r_min, self.r_max, self.points)


def default_grid(p: MoleculeParams, points_per_wavelength: float = 100.0, step: float | None = None) -> RadialGrid:
    """Grid on [max(0.05 r0, 0.05), r0 + 30/a].

    The default step puts ``points_per_wavelength`` points on the shortest
    local de Broglie wavelength of a bound state, i.e. at E = 0 over the well
    bottom.
    """
    r_min = max(0.05 * p.r0, 0.05)
    r_max = p.r0 + 30.0 / p.a
    if step is None:
        k_max = math.sqrt(2.0 * p.mu * p.D / HBAR2)
        step = 2.0 * math.pi / k_max / points_per_wavelength
    return RadialGrid.from_step(r_min, r_max, step)


@numba.njit(cache=True)
def _outward(f, h, keep):
    n = f.size
    u = np.zeros(n)
    c = h * h / 12.0
    i0 = 0
    while i0 < n - 2 and c * f[i0] > _WALL_CUTOFF:
        i0 += 1
    u[i0 + 1] = 1e-30
    nodes = 0
    for i in range(i0 + 1, n - 1):
        u[i + 1] = (2.0 * (1.0 + 5.0 * c * f[i]) * u[i] - (1.0 - c * f[i - 1]) * u[i - 1]) / (1.0 - c * f[i + 1])
        if u[i + 1] * u[i] < 0.0:
            nodes += 1
        if abs(u[i + 1]) > _RESCALE:
            # past ``keep`` only the running pair is rescaled so the kept
            # prefix does not underflow
            start = 0 if i + 1 <= keep else i
            for j in range(start, i + 2):
                u[j] /= _RESCALE
    return nodes, u


@numba.njit(cache=True)
def _inward(f, h, kappa, stop):
    n = f.size
    u = np.zeros(n)
    c = h * h / 12.0
    u[n - 1] = 1.0
    u[n - 2] = math.exp(kappa * h)
    for i in range(n - 2, stop, -1):
        u[i - 1] = (2.0 * (1.0 + 5.0 * c * f[i]) * u[i] - (1.0 - c * f[i + 1]) * u[i + 1]) / (1.0 - c * f[i - 1])
        if abs(u[i - 1]) > _RESCALE:
            for j in range(i - 1, n):
                u[j] /= _RESCALE
    return u


@dataclass(frozen=True)
class NumerovResult:
    """One integration at fixed E.

    ``node_count`` counts sign changes of the outward solution over the whole
    grid.  ``boundary_residual`` is the log-derivative mismatch, in units of
    kappa, between the outward solution and an inward solution seeded with the
    asymptotic decay exp(-kappa r), taken at the outer classical turning point.
    ``u`` is the stitched (unnormalized) solution.
    """

    node_count: int
    boundary_residual: float
    r: np.ndarray
    u: np.ndarray


def numerov_integrate(p: MoleculeParams, l: int, E: float, grid: RadialGrid) -> NumerovResult:
    if not E < 0:
        raise ValueError("bound-state search needs E < 0")
    r = grid.r
    h = r[1] - r[0]
    k2 = 2.0 * p.mu / HBAR2
    v = effective_potential(p, l, r)
    f = k2 * (v - E)
    kappa = math.sqrt(-k2 * E)
    allowed = np.nonzero(v < E)[0]
    m = int(allowed[-1]) + 1 if allowed.size else int(np.argmin(v))
    m = min(max(m, 2), r.size - 3)

    nodes, u_out = _outward(f, h, m + 1)
    u_in = _inward(f, h, kappa, m - 2)

    d_out = (u_out[m + 1] - u_out[m - 1]) / (2.0 * h)
    d_in = (u_in[m + 1] - u_in[m - 1]) / (2.0 * h)
    residual = (d_out / u_out[m] - d_in / u_in[m]) / kappa

    u = u_out.copy()
    u[m:] = u_in[m:] * (u_out[m] / u_in[m])
    u /= np.abs(u).max()
    return NumerovResult(nodes, float(residual), r, u)


@dataclass(frozen=True)
class ShootingResult:
    n: int
    l: int
    energy: float
    node_count: int
    boundary_residual: float
    converged: bool
    r: np.ndarray | None = None
    u: np.ndarray | None = None


class LevelNotBoundError(RuntimeError):
    pass


def solve_level(
    p: MoleculeParams,
    n: int,
    l: int,
    tol: float = 1e-7,
    grid: RadialGrid | None = None,
    residual_tol: float = 1e-2,
) -> ShootingResult:
    """Energy of the level with ``n`` nodes by node-count bisection.

    The returned ``u`` is normalized so that the integral of u^2 dr is 1 and
    is positive near its first maximum.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if grid is None:
        grid = default_grid(p)
    r = grid.r
    lo = float(np.min(effective_potential(p, l, r)))
    hi = -1e-12 * p.D

    def nodes_at(E):
        return numerov_integrate(p, l, E, grid).node_count

    if lo >= hi or nodes_at(hi) <= n:
        raise LevelNotBoundError(f"level n={n}, l={l} not bound numerically")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if nodes_at(mid) > n:
            hi = mid
        else:
            lo = mid
    energy = 0.5 * (lo + hi)
    res = numerov_integrate(p, l, energy, grid)
    u = res.u / math.sqrt(simpson(res.u**2, x=r))
    if u[np.argmax(np.abs(u) > 1e-3 * np.abs(u).max())] < 0:
        u = -u
    nodes = _count_nodes(u)
    converged = nodes == n and abs(res.boundary_residual) < residual_tol
    return ShootingResult(n, l, energy, nodes, res.boundary_residual, converged, r, u)


def _count_nodes(u, rel=1e-8):
    # ignore roundoff-level wiggles in the deep tails
    v = u[np.abs(u) > rel * np.abs(u).max()]
    return int(np.count_nonzero(np.signbit(v[1:]) != np.signbit(v[:-1])))
