"""
Exact Fourier analysis on Z_p
=============================

Values live in Q(zeta_p), so supports are decided exactly with no
floating-point tolerance anywhere.
"""

import random

from rsumset import CycNum, ZpFunction, dft, idft, root_power, support, uncertainty_check

p = 5
z = CycNum.zeta_power(p, 1)

# 1 + zeta + ... + zeta^4 is exactly zero
total = CycNum.zero(p)
for k in range(p):
    total = total + z.mul_zeta(k - 1)
print("sum of 5th roots of unity is zero:", total.is_zero())

# e_p(r) = exp(-2 pi i r / p) is zeta^(-r)
print("e_5(1) =", root_power(p, 1), "~", root_power(p, 1).to_complex())

f = ZpFunction.from_values(p, [1, 1, 0, 0, 0])
fh = dft(f)
print("supp f    =", support(f).to_list())
print("supp fhat =", support(fh).to_list())
print("roundtrip exact:", idft(fh) == f)

# |supp f| + |supp fhat| >= p + 1, checked on random integer functions
rng = random.Random(0)
worst = min(uncertainty_check(ZpFunction.from_values(13, [rng.randint(-1, 1) or 1 for _ in range(13)])).lhs
            for _ in range(50))
print("smallest |supp f|+|supp fhat| seen at p=13:", worst, ">= 14")
