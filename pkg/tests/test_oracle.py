import math

import numpy as np
import pytest

from conftest import TABLES, TABULATED_STATES
from rotmorse.oracle import (
    LevelNotBoundError,
    RadialGrid,
    default_grid,
    numerov_integrate,
    solve_level,
)
from rotmorse.potential import CO, LIH
from rotmorse.spectrum import energy_level, morse_closed_form
from rotmorse.units import HBAR2


def test_grid_validation():
    with pytest.raises(ValueError):
        RadialGrid(2.0, 1.0, 0.001, 1001)
    with pytest.raises(ValueError):
        RadialGrid.from_step(0.1, 1.0, 0.01)
    g = RadialGrid.from_step(0.1, 10.0, 0.001)
    assert g.points == 9901 and g.r[0] == 0.1 and g.r[-1] == 10.0


def test_default_grid(molecule):
    p = molecule
    g = default_grid(p)
    assert 0 < g.r_min < p.r0 < g.r_max
    assert g.r_max == pytest.approx(p.r0 + 30 / p.a)
    assert g.points >= 1000
    k_half = math.sqrt(2 * p.mu * (p.D / 2) / HBAR2)
    assert 2 * math.pi / k_half / g.step >= 40


def test_below_well_bottom(molecule):
    g = default_grid(molecule)
    for E in (-1.5 * molecule.D, -1.01 * molecule.D):
        res = numerov_integrate(molecule, 0, E, g)
        assert res.node_count == 0
        assert res.boundary_residual > 0


def test_energy_must_be_negative():
    with pytest.raises(ValueError):
        numerov_integrate(CO, 0, 0.0, default_grid(CO))


def test_residual_changes_sign_at_ground_state(molecule):
    g = default_grid(molecule)
    e0 = float(morse_closed_form(molecule, 0))
    below = numerov_integrate(molecule, 0, e0 - 1e-6, g).boundary_residual
    above = numerov_integrate(molecule, 0, e0 + 1e-6, g).boundary_residual
    assert below * above < 0


def test_node_count_monotone_in_energy():
    g = default_grid(LIH)
    counts = [numerov_integrate(LIH, 3, E, g).node_count for E in np.linspace(-2.45, -0.3, 120)]
    assert counts == sorted(counts)
    assert counts[0] == 0 and counts[-1] > 10


def test_co_ground_state():
    res = solve_level(CO, 0, 0)
    assert res.converged and res.node_count == 0
    assert res.energy == pytest.approx(-11.0915, abs=5e-4)
    assert abs(res.energy - energy_level(CO, 0, 0).energy) < 2e-3


def test_lih_rotating_ground_state():
    res = solve_level(LIH, 0, 10)
    assert res.converged
    assert abs(res.energy - TABLES["LiH"][1][(0, 10)]) < 3e-3


@pytest.mark.parametrize("p", [CO, LIH])
def test_l0_levels_exact(p):
    for n in (0, 3, 9, 15):
        res = solve_level(p, n, 0)
        assert res.converged and res.node_count == n
        assert res.energy == pytest.approx(float(morse_closed_form(p, n)), abs=1e-6)


def test_eigenfunction_normalized():
    from scipy.integrate import simpson

    res = solve_level(LIH, 2, 4)
    assert simpson(res.u**2, x=res.r) == pytest.approx(1.0, rel=1e-12)
    assert res.u[np.argmax(np.abs(res.u) > 1e-3)] > 0


@pytest.mark.parametrize("state", TABULATED_STATES)
def test_grid_refinement(state):
    mol, n, l = state
    p = TABLES[mol][0]
    g = default_grid(p)
    fine = RadialGrid.from_step(g.r_min, g.r_max, g.step / 2)
    e1 = solve_level(p, n, l, tol=1e-9, grid=g).energy
    e2 = solve_level(p, n, l, tol=1e-9, grid=fine).energy
    assert abs(e1 - e2) < 1e-6


def test_unbound_and_bad_tolerance():
    with pytest.raises(LevelNotBoundError):
        solve_level(LIH, 40, 0)
    with pytest.raises(ValueError):
        solve_level(LIH, 0, 0, tol=0)
