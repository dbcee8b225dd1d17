"""Reference computations that share no code with the library.

Series coefficients come from Bernoulli-number closed forms (Bernoulli
numbers via the Akiyama-Tanigawa algorithm), signatures from numpy
eigenvalues, and spectral asymmetry from brute-force Abel summation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def bernoulli_at(n: int) -> Fraction:
    """B_n with B_1 = +1/2 (Akiyama-Tanigawa); only even n are used here."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def tanh_coefficients(T: int) -> list[Fraction]:
    out = [Fraction(0)] * (T + 1)
    for n in range(1, T // 2 + 2):
        d = 2 * n - 1
        if d > T:
            break
        b = bernoulli_at(2 * n)
        out[d] = Fraction(4**n * (4**n - 1)) * b / math.factorial(2 * n)
    return out


def density_coefficients(T: int) -> list[Fraction]:
    """``1/c - coth(c/2)/2 = -sum_{n>=1} B_2n c^(2n-1) / (2n)!``."""
    out = [Fraction(0)] * (T + 1)
    for n in range(1, T // 2 + 2):
        d = 2 * n - 1
        if d > T:
            break
        out[d] = -bernoulli_at(2 * n) / math.factorial(2 * n)
    return out


def ahat_coefficients(T: int) -> list[Fraction]:
    """``(x/2)/sinh(x/2) = sum -(2^2n - 2) B_2n (x/2)^2n / (2n)!``."""
    out = [Fraction(0)] * (T + 1)
    out[0] = Fraction(1)
    for n in range(1, T // 2 + 1):
        b = bernoulli_at(2 * n)
        out[2 * n] = -Fraction(4**n - 2) * b / math.factorial(2 * n) / 4**n
    return out


def ch_coefficients(T: int) -> list[Fraction]:
    return [Fraction(1, 2**d * math.factorial(d)) for d in range(T + 1)]


def long_division(num: list[Fraction], den: list[Fraction], order: int) -> list[Fraction]:
    """Schoolbook division of power series after stripping common powers of x."""
    v = next(i for i, c in enumerate(den) if c != 0)
    num, den = num[v:], den[v:]
    rem = list(num) + [Fraction(0)] * (order + 1)
    q = []
    for i in range(order + 1):
        coef = rem[i] / den[0]
        q.append(coef)
        for j, d in enumerate(den):
            if i + j < len(rem):
                rem[i + j] -= coef * d
    return q


def eigen_signature(matrix, tol: float = 1e-9) -> tuple[int, int, int]:
    ev = np.linalg.eigvalsh(np.asarray(matrix, dtype=float))
    return int((ev > tol).sum()), int((ev < -tol).sum()), int((abs(ev) <= tol).sum())


def abel_eta_progression(a: float, ts=(0.02, 0.01, 0.005), terms: int = 200_000) -> float:
    """Spectral asymmetry of ``{m + a : m in Z}`` by Abel summation.

    ``sum sign(lambda) exp(-t |lambda|)`` is a smooth function of ``t``
    near 0, so two Richardson steps on a halving sequence remove the
    ``O(t)`` and ``O(t^2)`` errors.
    """
    m = np.arange(terms, dtype=float)
    pos = m + a
    neg = m + 1 - a
    vals = [float(np.exp(-t * pos).sum() - np.exp(-t * neg).sum()) for t in ts]
    r1 = [2 * vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
    r2 = [(4 * r1[i + 1] - r1[i]) / 3 for i in range(len(r1) - 1)]
    return r2[-1]
