from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from etabundle.algebra import RadiusPolynomial
from etabundle.errors import ResidueOutOfRange, RiemannRochViolation, TrivialBundle
from etabundle.eta_coupled import (
    coupled_sf,
    eta_flat,
    flat_coupling_sf,
    third_transgression,
    xi_coupled_adiabatic,
    xi_coupled_LC,
    xi_flat,
    xi_flat_assembled,
    xi_flat_formula,
)
from etabundle.eta_spin import second_transgression
from etabundle.geometry import CoupledLine


def test_xi_coupled_LC_examples():
    assert xi_coupled_LC(2, 1, CoupledLine(1, 0)).value == RadiusPolynomial([F(-1, 3), 0, F(2, 3)])
    assert xi_coupled_LC(-2, 1, CoupledLine(-1, 1)).value == RadiusPolynomial([F(1, 3), 0, F(-2, 3)])
    assert xi_coupled_LC(5, 3, CoupledLine(0, 0)).value(0) == F(5, 12)


def test_coupled_sf_examples():
    assert coupled_sf(2, CoupledLine(1, 0)) == 1
    assert coupled_sf(-2, CoupledLine(3, 4)) == 0
    assert coupled_sf(1, CoupledLine(0, 0)) == 0


def test_xi_coupled_adiabatic_examples():
    x = xi_coupled_adiabatic(2, 1, CoupledLine(1, 0))
    assert (x.value, x.kernel_dim, x.eta) == (F(2, 3), 1, F(1, 3))
    x = xi_coupled_adiabatic(-6, 3, CoupledLine(0, 2))
    assert (x.value, x.kernel_dim, x.eta) == (F(3, 2), 4, -1)


@pytest.mark.parametrize("k,ell,expected", [(1, 2, F(1, 4)), (0, 7, 0), (3, -2, F(-9, 4))])
def test_third_transgression(k, ell, expected):
    assert third_transgression(k, ell) == expected


def test_flat_coupling_sf_examples():
    assert flat_coupling_sf(2, CoupledLine(1, 0)) == -1
    assert flat_coupling_sf(-3, CoupledLine(1, 2)) == -2
    assert flat_coupling_sf(5, CoupledLine(2, 0)) == -2
    # h_L = 0 with deg = 2 would need h_star = -2
    with pytest.raises(RiemannRochViolation):
        CoupledLine(2, -2)
    with pytest.raises(ResidueOutOfRange):
        flat_coupling_sf(3, CoupledLine(3, 0))


@pytest.mark.parametrize("ell,k,expected", [(2, 1, F(-1, 12)), (-3, 1, F(1, 12)), (12, 6, F(-1, 2))])
def test_xi_flat(ell, k, expected):
    assert xi_flat(ell, k) == expected


@pytest.mark.parametrize("ell,kappa,expected", [(2, 1, F(-1, 6)), (-3, 1, F(1, 6)), (6, 3, F(-1, 2))])
def test_eta_flat(ell, kappa, expected):
    assert eta_flat(ell, kappa) == expected


def test_xi_flat_range_and_trivial():
    with pytest.raises(ResidueOutOfRange):
        xi_flat(3, 0)
    with pytest.raises(ResidueOutOfRange):
        xi_flat(-3, 3)
    with pytest.raises(TrivialBundle):
        xi_flat(0, 1)


@st.composite
def coupled_case(draw):
    ell = draw(st.integers(-15, 15).filter(lambda x: abs(x) >= 2))
    g = draw(st.integers(0, 8))
    k = draw(st.integers(1, abs(ell) - 1))
    return ell, g, CoupledLine(k, draw(st.integers(0, 8)))


@given(coupled_case())
def test_pipeline_identities(case):
    ell, g, line = case
    step2 = xi_coupled_LC(ell, g, line).value + coupled_sf(ell, line) + second_transgression(ell, g)
    assert step2 == F(ell, 12) + F(line.kernel_dim, 2)
    assert xi_coupled_adiabatic(ell, g, line).eta == F(ell, 6)
    step3 = step2.constant_term() + flat_coupling_sf(ell, line) + third_transgression(line.deg, ell)
    assert step3 == xi_flat(ell, line.deg) == xi_flat_assembled(ell, g, line)
    assert eta_flat(ell, line.deg) == 2 * step3


@given(st.integers(-30, 30).filter(bool), st.integers(-100, 100))
def test_residue_shift_is_integral(ell, k):
    assert (xi_flat_formula(ell, k + abs(ell)) - xi_flat_formula(ell, k)).denominator == 1
