"""Floating-point eta oracle for arithmetic-progression spectra.

For the spectrum ``{k + a : k in Z}`` with ``0 < a < 1`` the positive part is
``{k + a}_{k>=0}`` and the negative part ``{-(k + 1 - a)}_{k>=0}``, so

    eta(s) = zeta_H(s, a) - zeta_H(s, 1 - a).

``zeta_H`` is continued to all ``s != 1`` by Euler-Maclaurin summation. This
is oracle-grade code: fixed cutoff, fixed number of Bernoulli corrections,
no error control.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .errors import DomainError

EM_CUTOFF = 10_000
EM_BERNOULLI_TERMS = 10


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number ``B_n`` with the ``B_1 = -1/2`` convention."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2:
        return Fraction(0)
    # sum_{k<=n} C(n+1, k) B_k = 0
    return -sum((comb(n + 1, k) * bernoulli(k) for k in range(n)), Fraction(0)) / (n + 1)


def hurwitz_zeta(s: float, a: float, cutoff: int = EM_CUTOFF, terms: int = EM_BERNOULLI_TERMS) -> float:
    if s == 1:
        raise DomainError("zeta_H has a pole at s = 1")
    if a <= 0:
        raise DomainError("Hurwitz parameter must be positive")
    k = np.arange(cutoff, dtype=float)
    head = float(np.sum((k + a) ** (-s)))
    x = cutoff + a
    tail = x ** (1 - s) / (s - 1) + 0.5 * x ** (-s)
    rising = s  # s (s+1) ... (s + 2j - 2)
    for j in range(1, terms + 1):
        tail += float(bernoulli(2 * j)) / factorial(2 * j) * rising * x ** (-s - 2 * j + 1)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    return head + tail


def eta_arithmetic_progression(a: float, s: float = 0.0) -> float:
    """Continued eta function of the spectrum ``Z + a`` at ``s`` (default 0)."""
    if not 0 < a < 1:
        raise DomainError(f"a = {a} must lie in (0, 1)")
    return hurwitz_zeta(s, a) - hurwitz_zeta(s, 1 - a)
