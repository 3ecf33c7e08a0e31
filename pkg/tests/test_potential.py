import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rotmorse.potential import (
    CO,
    LIH,
    MoleculeParams,
    effective_potential,
    morse_potential,
    pekeris_coefficients,
    pekeris_rotational_potential,
)
from rotmorse.units import rotational_unit


def with_alpha(alpha):
    return MoleculeParams("test", D=1.0, a=alpha, r0=1.0, mu=1.0)


def test_params_validation():
    for bad in ({"D": 0}, {"a": -1}, {"r0": 0}, {"mu": float("nan")}):
        kwargs = dict(name="x", D=1.0, a=1.0, r0=1.0, mu=1.0) | bad
        with pytest.raises(ValueError):
            MoleculeParams(**kwargs)


def test_x_r_roundtrip():
    r = np.array([0.5, 1.1283, 3.0])
    assert np.allclose(CO.to_r(CO.to_x(r)), r)
    assert CO.to_x(CO.r0) == 0


def test_morse_values(molecule):
    p = molecule
    assert morse_potential(p, p.r0) == pytest.approx(-p.D, rel=1e-15)
    assert -1e-12 < morse_potential(p, p.r0 + 60 / p.a) < 0
    # e^-2 - 2 e^-1 = -0.600423599...
    assert morse_potential(p, p.r0 + 1 / p.a) == pytest.approx(-0.600423599106 * p.D, rel=1e-11)


def test_morse_minimum_at_r0(molecule):
    p = molecule
    r = np.linspace(0.3 * p.r0, 4 * p.r0, 20001)
    v = morse_potential(p, r)
    assert v.min() >= -p.D * (1 + 1e-15)
    i = np.argmin(v)
    assert abs(r[i] - p.r0) < r[1] - r[0]
    dv = np.diff(v)
    assert np.all(dv[: i - 1] < 0) and np.all(dv[i + 1 :] > 0)


def test_effective_potential():
    r = np.linspace(0.5, 5, 50)
    assert np.array_equal(effective_potential(CO, 0, r), morse_potential(CO, r))
    unit = rotational_unit(CO.mu, CO.r0)
    assert effective_potential(CO, 1, CO.r0) == pytest.approx(-CO.D + 2 * unit)
    assert effective_potential(CO, 10, CO.r0) == pytest.approx(-CO.D + 110 * 2.3930237e-4, rel=1e-9)
    with pytest.raises(ValueError):
        effective_potential(CO, 1, 0.0)
    with pytest.raises(ValueError):
        effective_potential(CO, -1, 1.0)


def test_pekeris_alpha_one():
    c = pekeris_coefficients(with_alpha(1.0), 0)
    assert (c.D0, c.D1, c.D2) == (1.0, -2.0, 2.0)
    assert c.gamma == 0


def test_pekeris_co():
    c = pekeris_coefficients(CO, 5)
    assert c.alpha == pytest.approx(2.59441302, rel=1e-9)
    assert c.D0 == pytest.approx(0.2893694783, rel=1e-9)
    assert c.D1 == pytest.approx(0.6503737618, rel=1e-9)
    assert c.D2 == pytest.approx(0.0602567598, rel=1e-9)
    assert c.gamma == pytest.approx(30 * 2.3930237e-4, rel=1e-7)


@given(st.floats(min_value=0.05, max_value=50.0))
def test_pekeris_taylor_identities(alpha):
    c = pekeris_coefficients(with_alpha(alpha), 3)
    eps = 64 * np.finfo(float).eps
    mag = abs(c.D0) + abs(c.D1) + abs(c.D2)
    assert abs(c.D0 + c.D1 + c.D2 - 1) <= eps * mag
    assert abs(c.D1 * alpha + 2 * c.D2 * alpha - 2) <= eps * mag * alpha
    assert abs(c.D1 * alpha**2 / 2 + 2 * c.D2 * alpha**2 - 3) <= eps * mag * alpha**2


def test_pekeris_gamma_zero_iff_l_zero():
    assert pekeris_coefficients(CO, 0).gamma == 0
    assert all(pekeris_coefficients(CO, l).gamma > 0 for l in range(1, 20))
    x = np.linspace(-0.5, 0.5, 11)
    assert np.all(pekeris_rotational_potential(pekeris_coefficients(CO, 0), x) == 0)


def test_pekeris_anchor_and_accuracy():
    c = pekeris_coefficients(CO, 5)
    assert pekeris_rotational_potential(c, 0.0) == pytest.approx(c.gamma, rel=1e-14)
    true = c.gamma / 1.1**2
    assert abs(pekeris_rotational_potential(c, 0.1) - true) < 1e-3 * c.gamma


@pytest.mark.parametrize("p", [CO, LIH])
def test_pekeris_third_order_error(p):
    c = pekeris_coefficients(p, 4)
    x = np.linspace(-0.05, 0.05, 201)
    x = x[x != 0]
    err = pekeris_rotational_potential(c, x) - c.gamma / (1 + x) ** 2
    ratio = np.abs(err) / (c.gamma * np.abs(x) ** 3)
    # the cubic coefficient of the mismatch is finite: -4 + alpha^3 (D1/6 + 4 D2/3)
    bound = abs(-4 + p.alpha**3 * (c.D1 / 6 + 4 * c.D2 / 3)) * 1.5 + 1
    assert ratio.max() < bound
    assert math.isfinite(ratio.max())
