"""Spectral flow of the Hessian at an irreducible monopole ``[phi, A]`` on the
circle bundle (``n < 0``, so ``phi_- = 0``).

Everything is modelled fiberwise: sections collapse to single complex
values. Hermitian products are conjugate-linear in the first slot,
``<u, v> = conj(u) * v``.

The tangent-vector model ``(psi_-, psi_+, a0, omega, f)`` stands for
``psi + i a + i f`` with ``i a = i a0 varphi + (omega - conj(omega)) / 2``.
Its real inner product weights the horizontal 1-form slot by ``1/2``
(``|omega eps - conj(omega eps)|^2 / 4 = |omega|^2 / 2`` in a unitary
coframe).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import RationalLike, SymmetricForm, as_rational, sign, signature
from .errors import CliffordViolation, InvalidModuli, UnsupportedSign, ValidationError
from .geometry import require_nontrivial

SQRT2 = 2**0.5


def hermitian(u: complex, v: complex) -> complex:
    return u.conjugate() * v


@dataclass(frozen=True)
class SpinorBlock:
    minus: complex = 0j
    plus: complex = 0j


@dataclass(frozen=True)
class TangentVector:
    spinor: SpinorBlock = SpinorBlock()
    a0: float = 0.0
    omega: complex = 0j
    f: float = 0.0

    def inner(self, other: "TangentVector") -> float:
        """Real inner product of the fiberwise model."""
        return (
            hermitian(self.spinor.minus, other.spinor.minus).real
            + hermitian(self.spinor.plus, other.spinor.plus).real
            + self.a0 * other.a0
            + 0.5 * hermitian(self.omega, other.omega).real
            + self.f * other.f
        )


@dataclass(frozen=True)
class ResonanceInstance:
    phi_plus: complex

    def __post_init__(self):
        if self.phi_plus == 0:
            raise ValidationError("irreducible limit needs phi_+ != 0")


def clifford_block(a: float, b: float, c: float) -> np.ndarray:
    """Clifford multiplication by ``a varphi + b varphi_1 + c varphi_2`` on
    ``K^{-1/2} L + K^{1/2} L``, with the off-diagonal frame units set to 1."""
    return np.array([[1j * a, b + 1j * c], [-(b - 1j * c), -1j * a]], dtype=complex)


def perturbation_apply(inst: ResonanceInstance, xi: TangentVector) -> TangentVector:
    """Apply the zeroth-order perturbation ``P_phi`` slot by slot.

    Spinor slots follow the printed row ``(-conj(omega) phi_+, -i f phi_+)``.
    The 1-form output ``2^{-1/2}(psi_- conj(phi_+) - c.c.)`` is stored through
    its ``K``-coefficient ``sqrt(2) psi_- conj(phi_+)``.
    """
    p = inst.phi_plus
    psi_m, psi_p = xi.spinor.minus, xi.spinor.plus
    return TangentVector(
        spinor=SpinorBlock(minus=-xi.omega.conjugate() * p, plus=-1j * xi.f * p),
        a0=hermitian(p, psi_p).real,
        omega=SQRT2 * psi_m * p.conjugate(),
        f=hermitian(p, psi_p).imag,
    )


def resonance_pairing(inst: ResonanceInstance, xi: TangentVector) -> float:
    p = inst.phi_plus
    return (
        SQRT2 * xi.f * hermitian(p, xi.spinor.plus).imag
        - (xi.spinor.minus.conjugate() * p * xi.omega.conjugate()).real
    )


def perturbation_pairing(inst: ResonanceInstance, xi: TangentVector) -> float:
    """``<P xi, xi>`` in the model inner product."""
    return perturbation_apply(inst, xi).inner(xi)


def q1_gram(d: int) -> SymmetricForm:
    """Gram matrix of ``f * v_2`` on ``R + C^d`` in a symplectic basis
    ``e_1 = phi_+, e_2, ..., e_2d``; coordinates ``(f, v_1, ..., v_2d)``."""
    if d < 1:
        raise ValidationError("Q1 needs d >= 1 (phi_+ spans a line)")
    return SymmetricForm.from_pairs(2 * d + 1, {(0, 2): Fraction(1, 2)})


def q2_gram(g: int, m: int) -> SymmetricForm:
    """Gram matrix of ``-Re<u, v>`` on ``U + V`` with ``dim_R U = 2m`` embedded
    in the first ``2m`` real coordinates of ``V = H^0(K)``, ``dim_R V = 2g``."""
    if g < 0 or m < 0:
        raise ValidationError("g and m must be non-negative")
    if m > g:
        raise CliffordViolation(f"multiplication map cannot be injective: m = {m} > g = {g}")
    n = 2 * m + 2 * g
    return SymmetricForm.from_pairs(n, {(i, 2 * m + i): Fraction(-1, 2) for i in range(2 * m)})


def degenerate_contribution(ell: int) -> int:
    """Contribution of the single order-two pair: its second-order eigenvalue
    has sign ``-sign(ell)`` and only negative ones count."""
    s = require_nontrivial(ell)
    return -1 if -s < 0 else 0


def explicit_adot_coefficient(ell: int, norm_sq_integral: RationalLike = 1) -> tuple[Fraction, int]:
    """Coefficient ``-1/(2 ell)`` of ``|phi_+|^2 varphi`` in the first-order
    correction, and the sign of the resulting second-order pairing."""
    require_nontrivial(ell)
    norm = as_rational(norm_sq_integral)
    if norm <= 0:
        raise ValidationError("the L2 norm integral must be positive")
    coef = Fraction(-1, 2 * ell)
    return coef, sign(coef * norm)


def _check_h_star(h_star: int) -> None:
    if h_star < 0:
        raise ValidationError("h_star must be >= 0")


def nondegenerate_sf(h_star: int) -> int:
    _check_h_star(h_star)
    return -1 - 2 * h_star


def sf_plus(ell: int, h_star: int) -> int:
    s = require_nontrivial(ell)
    _check_h_star(h_star)
    closed = -2 - 2 * h_star if s > 0 else -1 - 2 * h_star
    assert closed == nondegenerate_sf(h_star) + degenerate_contribution(ell)
    return closed


def sf_minus(ell: int, h_star: int) -> int:
    return sf_plus(-ell, h_star)


def sf_plus_from_resonance(ell: int, g: int, h_star: int, h_L: int) -> dict:
    """Assemble ``SF_+`` from the signatures of ``Q1`` and ``Q2``."""
    sig1 = signature(q1_gram(h_L))
    sig2 = signature(q2_gram(g, h_star))
    deg = degenerate_contribution(ell)
    return {
        "Q1": sig1.as_tuple(),
        "Q2": sig2.as_tuple(),
        "nondegenerate": -(sig1.n_minus + sig2.n_minus),
        "degenerate": deg,
        "ker_R": sig1.n_zero + sig2.n_zero,
        "sf_plus": -(sig1.n_minus + sig2.n_minus) + deg,
    }


def ker_counts(g: int, n: int) -> tuple[int, int]:
    """``(dim ker H_t for t > 0, dim ker R)`` at an irreducible with ``n < 0``."""
    if n >= 0:
        raise UnsupportedSign(f"n = {n}: only n < 0 is supported")
    if g < 1 + abs(n):
        raise InvalidModuli(f"g = {g} < 1 + |n| = {1 + abs(n)}: empty moduli space")
    ker_h = 2 * (g - 1 - abs(n))
    ker_r = 2 * (g - abs(n)) - 1
    assert ker_r - ker_h == 1
    return ker_h, ker_r


def random_instance(rng) -> tuple[ResonanceInstance, TangentVector]:
    """Draw a random instance; ``rng`` is a ``numpy.random.Generator``."""

    def z():
        return complex(*rng.normal(size=2))

    phi = z()
    while abs(phi) < 1e-3:
        phi = z()
    xi = TangentVector(
        spinor=SpinorBlock(minus=z(), plus=z()),
        a0=0.0,
        omega=z(),
        f=float(rng.normal()),
    )
    return ResonanceInstance(phi), xi


__all__ = [
    "SpinorBlock",
    "TangentVector",
    "ResonanceInstance",
    "clifford_block",
    "perturbation_apply",
    "perturbation_pairing",
    "resonance_pairing",
    "q1_gram",
    "q2_gram",
    "degenerate_contribution",
    "explicit_adot_coefficient",
    "nondegenerate_sf",
    "sf_plus",
    "sf_minus",
    "sf_plus_from_resonance",
    "ker_counts",
    "random_instance",
]
