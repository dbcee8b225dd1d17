import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from etabundle.algebra import signature
from etabundle.errors import CliffordViolation, InvalidModuli, UnsupportedSign
from etabundle.resonance import (
    ResonanceInstance,
    SpinorBlock,
    TangentVector,
    clifford_block,
    degenerate_contribution,
    explicit_adot_coefficient,
    ker_counts,
    nondegenerate_sf,
    perturbation_apply,
    perturbation_pairing,
    q1_gram,
    q2_gram,
    random_instance,
    resonance_pairing,
    sf_minus,
    sf_plus,
    sf_plus_from_resonance,
)

from oracles import eigen_signature

I2 = np.eye(2)
small = st.integers(-5, 5)


def test_clifford_examples():
    a, b, c = clifford_block(1, 0, 0), clifford_block(0, 1, 0), clifford_block(0, 0, 1)
    assert np.array_equal(a @ b @ c, -I2)
    assert np.array_equal(a @ a, -I2)
    assert np.array_equal(b @ c + c @ b, np.zeros((2, 2)))


@given(small, small, small, small, small, small)
def test_clifford_relation_exact_on_integers(a1, b1, c1, a2, b2, c2):
    u, v = clifford_block(a1, b1, c1), clifford_block(a2, b2, c2)
    assert np.array_equal(u @ v + v @ u, -2 * (a1 * a2 + b1 * b2 + c1 * c2) * I2)


def test_perturbation_examples():
    inst = ResonanceInstance(1 + 0j)
    zero = perturbation_apply(inst, TangentVector())
    assert zero == TangentVector()
    out = perturbation_apply(inst, TangentVector(spinor=SpinorBlock(plus=1j)))
    assert (out.a0, out.f) == (0.0, 1.0)
    out = perturbation_apply(inst, TangentVector(f=1.0))
    assert out.spinor == SpinorBlock(minus=0j, plus=-1j) and out.omega == 0 and out.f == 0


def test_resonance_pairing_examples():
    inst = ResonanceInstance(1 + 0j)
    assert resonance_pairing(inst, TangentVector(spinor=SpinorBlock(plus=1j), f=1.0)) == pytest.approx(math.sqrt(2))
    assert resonance_pairing(inst, TangentVector(spinor=SpinorBlock(minus=1 + 0j), omega=1 + 0j)) == -1.0
    assert resonance_pairing(inst, TangentVector(spinor=SpinorBlock(plus=3j), a0=2.0, omega=1j)) == 0.0


@given(st.integers(0, 2**32 - 1))
def test_model_pairing_closed_form(seed):
    """What the literal operator yields in the model inner product: the
    ``f`` terms cancel and the 1-form slot contributes ``2^{-1/2} Re(...)``."""
    rng = np.random.default_rng(seed)
    inst, xi = random_instance(rng)
    xi = TangentVector(xi.spinor, float(rng.normal()), xi.omega, xi.f)
    p, pm, pp = inst.phi_plus, xi.spinor.minus, xi.spinor.plus
    expected = (
        -(pm.conjugate() * p * xi.omega.conjugate()).real
        + (pm.conjugate() * p * xi.omega).real / math.sqrt(2)
        + xi.a0 * (p.conjugate() * pp).real
    )
    assert perturbation_pairing(inst, xi) == pytest.approx(expected, abs=1e-12)


def test_q1_examples():
    assert q1_gram(1).entries[0][2] == F(1, 2)
    assert signature(q1_gram(1)).as_tuple() == (1, 1, 1)
    assert signature(q1_gram(4)).as_tuple() == (1, 1, 7)


def test_q2_examples():
    assert signature(q2_gram(2, 1)).as_tuple() == (2, 2, 2)
    assert signature(q2_gram(3, 0)).as_tuple() == (0, 0, 6)
    assert signature(q2_gram(1, 1)).as_tuple() == (2, 2, 0)
    with pytest.raises(CliffordViolation):
        q2_gram(1, 2)


@pytest.mark.parametrize("d", range(1, 9))
def test_q1_signature_sweep(d):
    form = q1_gram(d)
    assert signature(form).as_tuple() == (1, 1, 2 * d - 1) == eigen_signature(form.entries)


@pytest.mark.parametrize("g", range(1, 9))
def test_q2_signature_sweep(g):
    for m in range(g + 1):
        form = q2_gram(g, m)
        assert signature(form).as_tuple() == (2 * m, 2 * m, 2 * g - 2 * m) == eigen_signature(form.entries)


def test_degenerate_contribution():
    assert (degenerate_contribution(5), degenerate_contribution(-5)) == (-1, 0)
    assert (degenerate_contribution(1), degenerate_contribution(-1)) == (-1, 0)


def test_explicit_adot():
    assert explicit_adot_coefficient(2, 1) == (F(-1, 4), -1)
    assert explicit_adot_coefficient(-3, 5) == (F(1, 6), 1)


@pytest.mark.parametrize("ell,h,expected", [(3, 2, -6), (-3, 0, -1), (1, 0, -2)])
def test_sf_plus_examples(ell, h, expected):
    assert sf_plus(ell, h) == expected
    assert sf_minus(-ell, h) == expected


def test_sf_assembly_sweep():
    for ell in range(-10, 11):
        if ell == 0:
            continue
        for h in range(11):
            assert nondegenerate_sf(h) + degenerate_contribution(ell) == sf_plus(ell, h)


@st.composite
def irreducible_data(draw):
    g = draw(st.integers(1, 8))
    n = -draw(st.integers(1, g))
    h_star = draw(st.integers(-n, g))
    return draw(st.integers(-12, 12).filter(bool)), g, n, h_star


@given(irreducible_data())
def test_resonance_assembly_and_kernel(data):
    ell, g, n, h_star = data
    h_L = h_star + n
    if h_L < 1:
        return
    res = sf_plus_from_resonance(ell, g, h_star, h_L)
    assert res["sf_plus"] == sf_plus(ell, h_star)
    assert res["ker_R"] == (2 * h_L - 1) + (2 * g - 2 * h_star) == 2 * (g - abs(n)) - 1


@pytest.mark.parametrize("g,n,expected", [(3, -1, (2, 3)), (2, -1, (0, 1))])
def test_ker_counts(g, n, expected):
    assert ker_counts(g, n) == expected


def test_ker_counts_errors():
    with pytest.raises(UnsupportedSign):
        ker_counts(3, 0)
    with pytest.raises(InvalidModuli):
        ker_counts(1, -1)
