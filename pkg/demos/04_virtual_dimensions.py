"""Virtual dimensions on manifolds with cylindrical ends, and tunnelings.

Every dimension is computed along two routes (index plus limit sets,
and bulk plus per-end boundary terms); the residual is printed.

Run: python demos/04_virtual_dimensions.py
"""

import json
from pathlib import Path

from etabundle import parse_manifest, tunneling_dim, tunneling_from_reducible
from etabundle.moduli import dimension_report, l_genus_integral

here = Path(__file__).parent / "manifests"

for name in ["one_irreducible_end.json", "reducible_end.json"]:
    man = parse_manifest(json.loads((here / name).read_text()))
    rep = dimension_report(man)
    print(f"{name}: ind = {rep.ind_Ow}, dim_v = {rep.dim_v}, betas = {[str(b) for b in rep.betas]}, "
          f"residual = {rep.assembly_residual}")

mixed = parse_manifest(json.loads((here / "mixed_ends.json").read_text()))
rep = dimension_report(mixed, assume_beta_additivity=True)
print(f"mixed_ends.json (additivity assumed): dim_v = {rep.dim_v}")

print("\nL-genus integral for signature 1 and ends of degree 3, -2:", l_genus_integral(1, [3, -2]))

print("\ntunnelings between irreducible limits (ell, g, n1, n2) -> dimension:")
for args in [(1, 1, -1, -2), (2, 2, -1, -3), (-3, 4, -2, -1)]:
    print(f"  {args}: {tunneling_dim(*args)}")

print("\ntunnelings from a reducible limit (ell, g, kappa, n) -> dimension:")
for args in [(2, 2, 1, -1), (-2, 2, 1, -1), (3, 2, 0, -1)]:
    print(f"  {args}: {tunneling_from_reducible(*args)}")
