"""Eta invariant of the arithmetic progression {m + a}: analytic
continuation through Hurwitz zeta versus brute-force Abel summation.

Run: python demos/05_zeta_continuation.py
"""

import numpy as np

from etabundle import eta_arithmetic_progression


def abel(a, t):
    m = np.arange(200_000, dtype=float)
    return float(np.exp(-t * (m + a)).sum() - np.exp(-t * (m + 1 - a)).sum())


print("   a    continuation    Abel (t = 1e-2)   1 - 2a")
for a in [0.1, 0.25, 0.5, 0.7, 0.9]:
    print(f"{a:5.2f}  {eta_arithmetic_progression(a):+.12f}  {abel(a, 1e-2):+.12f}  {1 - 2 * a:+.3f}")
