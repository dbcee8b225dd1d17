"""Exact arithmetic substrate.

Rationals are :class:`fractions.Fraction`; on top of them this module builds
polynomials in ``rho = r**2`` (:class:`RadiusPolynomial`), truncated
one-variable power series (:class:`PowerSeries`) and exact signatures of
symmetric forms.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence, Union

from .errors import DivisionByZero, NegativeValuation

Rational = Fraction
RationalLike = Union[int, Fraction]

DEFAULT_TRUNCATION = 8

_RATIONAL_RE = re.compile(r"^\s*([-−]?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_rational(x: RationalLike | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (ASCII or unicode minus) into a Fraction."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1).replace("−", "-"))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DivisionByZero(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: RationalLike) -> str:
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rational_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    a, b = as_rational(a), as_rational(b)
    if op not in _OPS:
        raise ValueError(f"unknown op {op!r}")
    if op == "div" and b == 0:
        raise DivisionByZero("division by the zero rational")
    return _OPS[op](a, b)


def sign(x: RationalLike) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# polynomials in rho = r^2
# ---------------------------------------------------------------------------


def _strip(coeffs: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    cs = [as_rational(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True, init=False)
class RadiusPolynomial:
    """Polynomial in ``rho = r**2`` with exact coefficients.

    ``coefficients[i]`` multiplies ``rho**i``. The zero polynomial has no
    stored coefficients and degree -1.
    """

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[RationalLike] = ()):
        object.__setattr__(self, "coefficients", _strip(coefficients))

    @classmethod
    def constant(cls, c: RationalLike) -> "RadiusPolynomial":
        return cls((c,))

    @classmethod
    def coerce(cls, other) -> "RadiusPolynomial":
        if isinstance(other, RadiusPolynomial):
            return other
        return cls.constant(as_rational(other))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def is_constant(self) -> bool:
        return self.degree <= 0

    def __call__(self, rho: RationalLike) -> Fraction:
        rho = as_rational(rho)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * rho + c
        return acc

    evaluate = __call__

    def __add__(self, other):
        try:
            other = RadiusPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        n = max(len(self.coefficients), len(other.coefficients))
        return RadiusPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RadiusPolynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        try:
            other = RadiusPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RadiusPolynomial.coerce(other) - self

    def __mul__(self, other):
        try:
            other = RadiusPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.coefficients or not other.coefficients:
            return RadiusPolynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return RadiusPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = RadiusPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coefficients]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "RadiusPolynomial":
        return cls(parse_rational(s) for s in data)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mono = "" if i == 0 else ("rho" if i == 1 else f"rho^{i}")
            if i == 0:
                body = format_rational(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{format_rational(abs(c))}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for s, body in parts[1:]:
            out += f" {s} {body}"
        return out

    def __repr__(self) -> str:
        return f"RadiusPolynomial({str(self)!r})"


RHO = RadiusPolynomial((0, 1))


# ---------------------------------------------------------------------------
# truncated power series
# ---------------------------------------------------------------------------


@dataclass(frozen=True, init=False)
class PowerSeries:
    """Truncated power series ``sum_{d<=T} a_d x**d`` over the rationals.

    Binary operations truncate to the smaller of the two orders.
    """

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable[RationalLike], order: int | None = None):
        cs = [as_rational(c) for c in coefficients]
        if order is not None:
            if order < 0:
                raise ValueError("truncation order must be non-negative")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("a power series needs at least one coefficient")
        object.__setattr__(self, "coefficients", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def monomial(cls, d: int, order: int, c: RationalLike = 1) -> "PowerSeries":
        return cls([0] * d + [c], order)

    def __getitem__(self, d: int) -> Fraction:
        return self.coefficient(d)

    def coefficient(self, d: int) -> Fraction:
        if d < 0 or d > self.order:
            raise IndexError(f"degree {d} outside 0..{self.order}")
        return self.coefficients[d]

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient; None for the zero series."""
        for d, c in enumerate(self.coefficients):
            if c != 0:
                return d
        return None

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.coefficients, order)

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries([as_rational(other)], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        T = min(self.order, other.order)
        return PowerSeries((self[d] + other[d] for d in range(T + 1)), T)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries((-c for c in self.coefficients), self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            k = as_rational(other)
            return PowerSeries((k * c for c in self.coefficients), self.order)
        T = min(self.order, other.order)
        out = [Fraction(0)] * (T + 1)
        for i in range(T + 1):
            a = self.coefficients[i]
            if a == 0:
                continue
            for j in range(T + 1 - i):
                out[i + j] += a * other.coefficients[j]
        return PowerSeries(out, T)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, PowerSeries):
            k = as_rational(other)
            if k == 0:
                raise DivisionByZero("division of a series by zero")
            return self * (1 / k)
        return series_div_valuation(self, other)

    def scale_variable(self, k: RationalLike) -> "PowerSeries":
        """Substitute ``x -> k*x``."""
        k = as_rational(k)
        return PowerSeries((c * k**d for d, c in enumerate(self.coefficients)), self.order)

    def shift_down(self, v: int) -> "PowerSeries":
        """Divide by ``x**v``; the lowest ``v`` coefficients must vanish."""
        if any(self.coefficients[:v]):
            raise NegativeValuation(f"series is not divisible by x^{v}")
        return PowerSeries(self.coefficients[v:], self.order - v)

    def shift_up(self, v: int) -> "PowerSeries":
        return PowerSeries([0] * v + list(self.coefficients), self.order)

    def inverse(self) -> "PowerSeries":
        a0 = self.coefficients[0]
        if a0 == 0:
            raise DivisionByZero("series with zero constant term is not a unit")
        inv = [1 / a0]
        for n in range(1, self.order + 1):
            s = sum(self.coefficients[k] * inv[n - k] for k in range(1, n + 1))
            inv.append(-s / a0)
        return PowerSeries(inv, self.order)

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + float(c)
        return acc

    def __repr__(self) -> str:
        terms = ", ".join(format_rational(c) for c in self.coefficients)
        return f"PowerSeries([{terms}], order={self.order})"


def series_div_valuation(num: PowerSeries, den: PowerSeries) -> PowerSeries:
    """Quotient of two series when the denominator may vanish at 0.

    ``x**v`` is factored out of both operands (``v`` the valuation of
    ``den``) and the remaining unit is inverted. The result has order
    ``min(num.order, den.order) - v``.
    """
    v = den.valuation()
    if v is None:
        raise DivisionByZero("denominator series is identically zero")
    vn = num.valuation()
    if vn is not None and vn < v:
        raise NegativeValuation(f"numerator valuation {vn} < denominator valuation {v}")
    T = min(num.order, den.order)
    n = num.truncate(T).shift_down(v)
    d = den.truncate(T).shift_down(v)
    return n * d.inverse()


def exp_series(T: int, k: RationalLike = 1) -> PowerSeries:
    k = as_rational(k)
    return PowerSeries((k**d / factorial(d) for d in range(T + 1)), T)


def sinh_series(T: int) -> PowerSeries:
    return PowerSeries((Fraction(1, factorial(d)) if d % 2 else 0 for d in range(T + 1)), T)


def cosh_series(T: int) -> PowerSeries:
    return PowerSeries((0 if d % 2 else Fraction(1, factorial(d)) for d in range(T + 1)), T)


def tanh_series(T: int) -> PowerSeries:
    if T < 0:
        raise ValueError("T must be >= 0")
    return sinh_series(T) * cosh_series(T).inverse()


def bc_density(T: int = DEFAULT_TRUNCATION) -> PowerSeries:
    """Series of ``(tanh(c/2) - c/2) / (c * tanh(c/2))`` to order ``T``.

    Numerator and denominator vanish to orders 3 and 2 at ``c = 0``; both
    are expanded two orders beyond ``T`` before the valuation-aware division.
    """
    if T < 1:
        raise ValueError("T must be >= 1")
    th = tanh_series(T + 2).scale_variable(Fraction(1, 2))
    num = th - PowerSeries.monomial(1, T + 2, Fraction(1, 2))
    den = th.shift_up(1)
    return series_div_valuation(num, den)


def ahat_series(T: int = DEFAULT_TRUNCATION) -> PowerSeries:
    """``(x/2) / sinh(x/2)``: the one-variable A-hat density."""
    if T < 0:
        raise ValueError("T must be >= 0")
    # sinh(y)/y, y = x/2
    s_over_y = sinh_series(T + 1).shift_down(1).scale_variable(Fraction(1, 2))
    return s_over_y.inverse()


def ch_series(T: int = DEFAULT_TRUNCATION) -> PowerSeries:
    """``exp(x/2)``, the Chern-character density convention."""
    if T < 0:
        raise ValueError("T must be >= 0")
    return exp_series(T, Fraction(1, 2))


# ---------------------------------------------------------------------------
# symmetric forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SignatureTriple:
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def dimension(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_minus, self.n_zero)


@dataclass(frozen=True, init=False)
class SymmetricForm:
    entries: tuple[tuple[Fraction, ...], ...]

    def __init__(self, entries: Sequence[Sequence[RationalLike]]):
        rows = tuple(tuple(as_rational(x) for x in row) for row in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("entries must form a square matrix")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"not symmetric at ({i},{j})")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def zeros(cls, n: int) -> "SymmetricForm":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def from_pairs(cls, n: int, pairs: dict[tuple[int, int], RationalLike]) -> "SymmetricForm":
        m = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in pairs.items():
            m[i][j] = m[j][i] = as_rational(v)
        return cls(m)

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def __call__(self, v: Sequence[RationalLike]) -> Fraction:
        v = [as_rational(x) for x in v]
        n = self.dimension
        return sum(
            (self.entries[i][j] * v[i] * v[j] for i in range(n) for j in range(n)),
            Fraction(0),
        )

    def congruent(self, P: Sequence[Sequence[RationalLike]]) -> "SymmetricForm":
        """Return ``P^T A P``."""
        n = self.dimension
        P = [[as_rational(x) for x in row] for row in P]
        A = self.entries
        AP = [[sum((A[i][k] * P[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]
        return SymmetricForm(
            [[sum((P[k][i] * AP[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]
        )


def signature(form: SymmetricForm) -> SignatureTriple:
    """Exact Sylvester signature by symmetric Gaussian reduction.

    Works on a copy of the matrix by congruence only: a nonzero diagonal
    pivot is swapped into place when available; otherwise a nonzero
    off-diagonal entry ``a_ij`` (with ``a_ii = a_jj = 0``) is turned into the
    pivot ``2*a_ij`` by adding row/column ``j`` to row/column ``i``.
    """
    A = [list(row) for row in form.entries]
    n = len(A)
    pos = neg = 0
    k = 0
    while k < n:
        p = next((i for i in range(k, n) if A[i][i] != 0), None)
        if p is None:
            hit = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if A[i][j] != 0), None)
            if hit is None:
                break  # trailing block is zero
            i, j = hit
            for t in range(n):
                A[i][t] += A[j][t]
            for t in range(n):
                A[t][i] += A[t][j]
            p = i
        if p != k:
            A[k], A[p] = A[p], A[k]
            for row in A:
                row[k], row[p] = row[p], row[k]
        piv = A[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if A[i][k] == 0:
                continue
            m = A[i][k] / piv
            for j in range(k, n):
                A[i][j] -= m * A[k][j]
        for i in range(k + 1, n):
            A[k][i] = A[i][k] = Fraction(0)
        k += 1
    return SignatureTriple(pos, neg, n - pos - neg)
