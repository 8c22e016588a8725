"""
Functions with prescribed supports
==================================

When |A| + |B| >= p + 1 there is an f with supp(f) = A and supp(fhat) = B.
We solve the vanishing constraints exactly over Q(zeta_p) and take a
generic combination of the nullspace.
"""

from rsumset import ResidueSet, construct_witness, dft, solve_support_system, support

p = 7
A = ResidueSet.parse(p, "0,2,3,6")
B = ResidueSet.parse(p, "1,2,4,5")

system = solve_support_system(p, A, B)
print("constraints:", len(system.constraint_matrix), "rank:", system.rank,
      "nullspace dimension:", system.dimension)

f = construct_witness(p, A, B, seed=1)
print("supp f    =", support(f).to_list())
print("supp fhat =", support(dft(f)).to_list())
for x, v in enumerate(f.values):
    print(f"  f({x}) = {[str(c) for c in v.coeffs]}")
