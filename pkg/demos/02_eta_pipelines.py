"""Building xi invariants step by step: Levi-Civita operator, adiabatic
operator, then a flat coupling. Each arrow adds a spectral flow and a
transgression term.

Run: python demos/02_eta_pipelines.py
"""

from etabundle import CoupledLine, xi_coupled_LC, xi_flat, xi_spin_LC
from etabundle.eta_coupled import coupled_sf, flat_coupling_sf, third_transgression, xi_flat_formula
from etabundle.eta_spin import second_transgression, sf_adiabatic_deformation, xi_spin_adiabatic

ell, g, h = 6, 2, 1
print(f"spin Dirac operator, degree {ell}, genus {g}, h = {h}")
lc = xi_spin_LC(ell, g, h)
print("  xi (Levi-Civita)       =", lc.value)
print("  + spectral flow        =", sf_adiabatic_deformation(ell, h))
print("  + transgression        =", second_transgression(ell, g))
adi = xi_spin_adiabatic(ell, g, h)
print("  = xi (adiabatic)       =", adi.value, "  kernel", adi.kernel_dim, "  eta", adi.eta)

ell, g, k, h_star = 5, 3, 2, 1
line = CoupledLine(k, h_star)
print(f"\ncoupled operator, degree {ell}, line degree {k}, h(L*) = {h_star}, h(L) = {line.h_L}")
step1 = xi_coupled_LC(ell, g, line).value
step2 = step1 + coupled_sf(ell, line) + second_transgression(ell, g)
print("  xi (Levi-Civita)       =", step1)
print("  xi (adiabatic)         =", step2)
step3 = step2.constant_term() + flat_coupling_sf(ell, line) + third_transgression(k, ell)
print("  xi (flat connection)   =", step3, " closed form:", xi_flat(ell, k))

print("\nchanging the residue by |ell| shifts xi by an integer:")
for kk in range(-3, 8):
    print(f"  k = {kk:>2}: xi = {str(xi_flat_formula(ell, kk)):>7}")
