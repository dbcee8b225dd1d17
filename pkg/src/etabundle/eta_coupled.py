"""Xi invariants of Dirac operators coupled to a line bundle on the circle
bundle, ending with the flat-connection invariant used for reducible
monopoles.

The computation runs in three steps. Step 1 couples the Levi-Civita
operator to a connection ``B`` pulled back from the base, step 2 deforms
to the adiabatic operator, step 3 moves ``B`` to a flat connection ``A``
along ``B_t = B - t (k i / ell) varphi``. Each step adds a spectral flow
and a transgression term.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import RadiusPolynomial
from .errors import AssemblyMismatch, ResidueOutOfRange
from .eta_spin import XiValue, second_transgression, transgression_polynomial
from .geometry import CoupledLine, require_nontrivial


def xi_coupled_LC(ell: int, g: int, line: CoupledLine) -> XiValue:
    s = require_nontrivial(ell)
    value = Fraction(ell, 12) - s * Fraction(line.kernel_dim, 2) + transgression_polynomial(ell, g)
    return XiValue(value, 0)


def coupled_sf(ell: int, line: CoupledLine) -> int:
    s = require_nontrivial(ell)
    return line.kernel_dim if s > 0 else 0


def xi_coupled_adiabatic(ell: int, g: int, line: CoupledLine) -> XiValue:
    require_nontrivial(ell)
    closed = RadiusPolynomial.constant(Fraction(ell, 12) + Fraction(line.kernel_dim, 2))
    assembled = xi_coupled_LC(ell, g, line).value + coupled_sf(ell, line) + second_transgression(ell, g)
    if assembled != closed:
        raise AssemblyMismatch(f"coupled adiabatic xi: pipeline {assembled} != closed form {closed}")
    return XiValue(closed, line.kernel_dim)


def third_transgression(k: int, ell: int) -> Fraction:
    require_nontrivial(ell)
    return Fraction(k * k, 2 * ell)


def _check_residue(k: int, ell: int) -> int:
    s = require_nontrivial(ell)
    if not 0 < k < abs(ell):
        raise ResidueOutOfRange(f"k = {k} must lie strictly between 0 and |ell| = {abs(ell)}")
    return s


def flat_coupling_sf(ell: int, line: CoupledLine) -> int:
    """Spectral flow along ``B_t``: minus the negative eigenvalues of the
    resonance matrix, which live on the ``K^{1/2} L`` block for ``ell > 0``
    and on the ``K^{1/2} L*`` block for ``ell < 0``."""
    s = _check_residue(line.deg, ell)
    return -line.h_L if s > 0 else -line.h_star


def xi_flat_formula(ell: int, k: int) -> Fraction:
    """``ell/12 + k^2/(2 ell) - sign(ell) k/2`` for any integer ``k``.

    No residue check; used for the formal residue-shift property and for
    reducible limits whose class is given by an arbitrary representative.
    """
    s = require_nontrivial(ell)
    return Fraction(ell, 12) + Fraction(k * k, 2 * ell) - s * Fraction(k, 2)


def xi_flat(ell: int, k: int) -> Fraction:
    _check_residue(k, ell)
    return xi_flat_formula(ell, k)


def xi_flat_assembled(ell: int, g: int, line: CoupledLine) -> Fraction:
    """Step 2 value plus the step 3 spectral flow and transgression."""
    base = xi_coupled_adiabatic(ell, g, line).value.constant_term()
    return base + flat_coupling_sf(ell, line) + third_transgression(line.deg, ell)


def eta_flat(ell: int, kappa: int) -> Fraction:
    s = _check_residue(kappa, ell)
    value = Fraction(ell, 6) + Fraction(kappa * kappa, ell) - kappa * s
    if value != 2 * xi_flat(ell, kappa):
        raise AssemblyMismatch("eta_flat != 2 xi_flat")
    return value
