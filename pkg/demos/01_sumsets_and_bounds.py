"""
Sumsets, restricted sumsets and their lower bounds
==================================================

Subsets of Z_p are bitmasks; C = {a+b : a in A, b in B, a-b not in S}
is built from rotations of B.
"""

from rsumset import ResidueSet, bound_table, restricted_sumset, strict_sumset, sumset

p = 7
A = ResidueSet.parse(p, "0,1,2")
B = ResidueSet.parse(p, "0,1,2,3")

# plain sumset: Cauchy-Davenport says |A+B| >= min(p, |A|+|B|-1)
print("A+B       =", sumset(A, B).to_list())

# forbid the difference 0, i.e. a != b
S = ResidueSet.parse(p, "0")
C = restricted_sumset(A, B, S)
print("C         =", C.to_list(), "size", len(C))

# all four closed-form bounds for these sizes
print(bound_table(p, len(A), len(B), len(S)))

# an arithmetic progression meets the Erdos-Heilbronn value 2|A|-3
A4 = ResidueSet.parse(p, "0,1,2,3")
print("A4 .+ A4  =", strict_sumset(A4, A4).to_list(), "vs 2*4-3 =", 2 * 4 - 3)

# small sizes make the raw bound negative; it is clamped and flagged
print(bound_table(7, 1, 1, 3))
