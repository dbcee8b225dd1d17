"""Spectral flow of the Hessian at an irreducible limit, read off from the
signatures of two resonance forms plus one degenerate pair.

Run: python demos/03_spectral_flow.py
"""

import numpy as np

from etabundle.algebra import signature
from etabundle.resonance import (
    perturbation_pairing,
    q1_gram,
    q2_gram,
    random_instance,
    resonance_pairing,
    sf_plus,
    sf_plus_from_resonance,
)

print("signature of Q1 (d = h(L)) and Q2 (g, m = h(L*)):")
for d in range(1, 5):
    print(f"  Q1 d={d}: {signature(q1_gram(d)).as_tuple()}")
for g, m in [(2, 0), (2, 1), (3, 2), (4, 4)]:
    print(f"  Q2 g={g} m={m}: {signature(q2_gram(g, m)).as_tuple()}")

print("\nSF_+ assembled from the forms versus the closed form:")
for ell, g, h_star, h_L in [(3, 3, 2, 1), (-3, 3, 2, 1), (1, 4, 3, 1), (-6, 5, 5, 2)]:
    res = sf_plus_from_resonance(ell, g, h_star, h_L)
    print(f"  ell={ell:>2} g={g} h*={h_star}: Q1 {res['Q1']} Q2 {res['Q2']} "
          f"degenerate {res['degenerate']:>2} -> {res['sf_plus']:>3}  (closed form {sf_plus(ell, h_star)})")

# The quadratic form of the literal zeroth-order operator differs from the
# stated closed form; see the decisions ledger for the analysis.
rng = np.random.default_rng(1)
print("\n<P xi, xi> versus the stated closed form on random instances:")
for _ in range(4):
    inst, xi = random_instance(rng)
    print(f"  {perturbation_pairing(inst, xi):+.6f}   {resonance_pairing(inst, xi):+.6f}")
