from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from etabundle.algebra import RHO, RadiusPolynomial
from etabundle.errors import TrivialBundle, ValidationError
from etabundle.eta_spin import (
    adiabatic_limit_eta,
    adiabatic_limit_via_series,
    aps_index_dirac,
    first_transgression,
    second_transgression,
    sf_adiabatic_deformation,
    xi_spin_adiabatic,
    xi_spin_LC,
)
from etabundle.geometry import small_eigenvalue

degrees = st.integers(-20, 20).filter(bool)
genera = st.integers(0, 10)
halves = st.integers(0, 10)


@pytest.mark.parametrize("ell,h,expected", [(6, 0, 1), (-2, 3, F(17, 3)), (5, 0, F(5, 6))])
def test_adiabatic_limit(ell, h, expected):
    assert adiabatic_limit_eta(ell, h) == expected


@pytest.mark.parametrize("ell,h,T,expected", [(6, 0, 4, 1), (12, 0, 1, 2), (-3, 1, 4, F(3, 2))])
def test_adiabatic_limit_via_series(ell, h, T, expected):
    assert adiabatic_limit_via_series(ell, h, T) == expected


@given(degrees, halves, st.integers(1, 9))
def test_series_route_agrees_for_all_truncations(ell, h, T):
    assert adiabatic_limit_via_series(ell, h, T) == adiabatic_limit_eta(ell, h)


def test_transgressions():
    assert first_transgression(6, 2) == -18 * RHO * RHO - RHO
    assert first_transgression(1, 1) == F(-1, 12) * RHO * RHO
    assert second_transgression(2, 1) == F(-2, 3) * RHO * RHO
    assert second_transgression(6, 2)(0) == 0


def test_xi_spin_LC_examples():
    assert xi_spin_LC(6, 2, 0).value == RadiusPolynomial([F(1, 2), 1, 18])
    assert xi_spin_LC(-1, 1, 2).value == RadiusPolynomial([F(23, 12), 0, F(-1, 12)])
    assert xi_spin_LC(6, 2, 0).kernel_dim == 0


@pytest.mark.parametrize("ell,h,expected", [(3, 2, 4), (-3, 2, 0), (5, 0, 0)])
def test_sf_adiabatic_deformation(ell, h, expected):
    assert sf_adiabatic_deformation(ell, h) == expected


def test_xi_spin_adiabatic_examples():
    x = xi_spin_adiabatic(6, 2, 0)
    assert (x.value, x.kernel_dim, x.eta) == (F(1, 2), 0, 1)
    x = xi_spin_adiabatic(-4, 7, 3)
    assert (x.value, x.kernel_dim, x.eta) == (F(8, 3), 6, F(-2, 3))


@given(degrees, genera, halves)
def test_pipeline_identity(ell, g, h):
    total = xi_spin_LC(ell, g, h).value + sf_adiabatic_deformation(ell, h) + second_transgression(ell, g)
    assert total == F(ell, 12) + h
    x = xi_spin_adiabatic(ell, g, h)
    assert x.value.degree <= 0
    assert x.eta == F(ell, 6)


@given(degrees, genera, halves)
def test_limit_consistency(ell, g, h):
    assert 2 * xi_spin_LC(ell, g, h).value(0) == adiabatic_limit_eta(ell, h)


@given(degrees, st.fractions(min_value=F(1, 1000), max_value=1))
def test_small_eigenvalue_sign(ell, r):
    lam = small_eigenvalue(ell, r)
    assert lam * ell < 0 and lam == -r * ell / 2


@pytest.mark.parametrize("p1,xi,expected", [(0, F(1, 2), F(-1, 2)), (24, 0, -1), (-12, F(1, 12), F(5, 12))])
def test_aps_index_dirac(p1, xi, expected):
    assert aps_index_dirac(p1, xi) == expected


def test_errors():
    with pytest.raises(TrivialBundle):
        xi_spin_LC(0, 1, 0)
    with pytest.raises(ValidationError):
        adiabatic_limit_eta(2, -1)
