import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rotmorse.units import CONSTANTS, cm1_to_ev, ev_to_cm1, rotational_unit

positive = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False)


def test_constant_ranges():
    assert 4.179e-3 < CONSTANTS.hbar2_over_amu_A2 < 4.181e-3
    assert 1.2397e-4 < CONSTANTS.cm1_to_ev < 1.2399e-4


def test_cm1_to_ev():
    assert cm1_to_ev(0) == 0
    # h c / e with CODATA 2018 exact h, c, e
    assert cm1_to_ev(90540) == pytest.approx(11.225529326, rel=1e-9)
    assert cm1_to_ev(20287) == pytest.approx(2.515267434, rel=1e-9)


def test_rotational_unit_values():
    assert rotational_unit(1.0, 1.0) == pytest.approx(2.0900796428e-3, rel=1e-9)
    assert rotational_unit(6.8606719, 1.1283) == pytest.approx(2.3930237e-4, rel=1e-7)


@pytest.mark.parametrize("mu, r0", [(0, 1), (-1, 1), (1, 0), (1, -2)])
def test_rotational_unit_domain(mu, r0):
    with pytest.raises(ValueError):
        rotational_unit(mu, r0)


@given(positive)
def test_cm1_roundtrip_and_linearity(x):
    assert ev_to_cm1(cm1_to_ev(x)) == pytest.approx(x, rel=1e-14)
    assert cm1_to_ev(2 * x) == pytest.approx(2 * cm1_to_ev(x), rel=1e-15)


@given(positive, positive)
def test_rotational_unit_scaling(mu, r0):
    base = rotational_unit(mu, r0)
    assert rotational_unit(mu, 2 * r0) == pytest.approx(base / 4, rel=1e-14)
    assert rotational_unit(2 * mu, r0) == pytest.approx(base / 2, rel=1e-14)
    assert math.isfinite(base) and base > 0
