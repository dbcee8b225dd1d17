from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from etabundle.errors import DomainError
from etabundle.zeta import bernoulli, eta_arithmetic_progression, hurwitz_zeta

from oracles import abel_eta_progression, bernoulli_at


def test_bernoulli_known_values():
    assert [bernoulli(n) for n in (0, 2, 4, 6, 8)] == [1, F(1, 6), F(-1, 30), F(1, 42), F(-1, 30)]
    assert bernoulli(3) == 0


@pytest.mark.parametrize("n", range(2, 24, 2))
def test_bernoulli_matches_independent_algorithm(n):
    assert bernoulli(n) == bernoulli_at(n)


@pytest.mark.parametrize("s,a", [(2.5, 0.3), (3.0, 0.7), (1.5, 0.5), (0.5, 0.2)])
def test_hurwitz_against_mpmath(s, a):
    assert hurwitz_zeta(s, a) == pytest.approx(float(mpmath.zeta(s, a)), rel=1e-11, abs=1e-11)


@given(st.floats(0.01, 0.99))
def test_hurwitz_at_zero(a):
    assert abs(hurwitz_zeta(0.0, a) - (0.5 - a)) < 1e-9


@pytest.mark.parametrize("a,expected", [(0.5, 0.0), (0.25, 0.5), (0.9, -0.8)])
def test_eta_examples(a, expected):
    assert abs(eta_arithmetic_progression(a) - expected) < 1e-9


@pytest.mark.parametrize("a", [0.1, 0.25, 0.37, 0.5, 0.8])
def test_eta_against_abel_summation(a):
    assert abs(eta_arithmetic_progression(a) - abel_eta_progression(a)) < 1e-8


@pytest.mark.parametrize("a", [0.0, 1.0, -0.2, 1.5])
def test_eta_domain(a):
    with pytest.raises(DomainError):
        eta_arithmetic_progression(a)
