"""Characteristic-class series and the small-radius limit of the spin eta invariant.

Run: python demos/01_series_and_adiabatic_limit.py
"""

import math
from fractions import Fraction

from etabundle import adiabatic_limit_eta, ahat_series, bc_density, ch_series, tanh_series
from etabundle.eta_spin import adiabatic_limit_via_series


def show(name, series, order):
    coeffs = ", ".join(str(series[d]) for d in range(order + 1))
    print(f"{name:>10}: [{coeffs}]")


T = 7
show("tanh", tanh_series(T), T)
show("density", bc_density(T), T)
show("A-hat", ahat_series(T), T)
show("ch", ch_series(T), T)

# Only the linear coefficient of A-hat * density survives integration over
# the base surface, so the limit is linear in the degree.
product = ahat_series(T) * bc_density(T)
print("\nlinear coefficient of A-hat * density:", product[1])

print("\n  ell   h   from series   closed form")
for ell, h in [(6, 0), (-2, 3), (12, 1), (-7, 2)]:
    via_series = adiabatic_limit_via_series(ell, h)
    print(f"{ell:>5} {h:>3}   {str(via_series):>11}   {str(adiabatic_limit_eta(ell, h)):>11}")

# The truncated density agrees with direct floating-point evaluation.
c = 1e-2
direct = (math.tanh(c / 2) - c / 2) / (c * math.tanh(c / 2))
print(f"\ndensity at c = {c}: series {bc_density(T)(c):.16e}, direct {direct:.16e}")
print("difference:", abs(bc_density(T)(c) - direct), "(tolerance 1e-12)")
assert Fraction(bc_density(T)[1]) == Fraction(-1, 12)
