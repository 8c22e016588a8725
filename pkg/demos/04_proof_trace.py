"""
Running the Fourier-analytic lower bound on one instance
========================================================

The trace builds witnesses f, g with interval Fourier supports, forms
F(x) = sum_a f(a) g(x-a) prod_{d in S} (e_p(x-a) - e_p(a-d)),
and checks each step from supp(F) and supp(Fhat) down to the bound on |C|.
"""

from rsumset import ResidueSet, support, trace_theorem2

p = 7
A = ResidueSet.parse(p, "0,1,2")
B = ResidueSet.parse(p, "0,1,2,3")
S = ResidueSet.parse(p, "0")

report = trace_theorem2(p, A, B, S, seed=0)
ctx = report.context
print(f"k={ctx.k} l={ctx.l} A_hat={ctx.A_hat.to_list()} B_hat={ctx.B_hat.to_list()}")
print("supp F    =", support(report.F).to_list(), "inside C =", report.actual_C.to_list())
print("supp Fhat =", support(report.F_hat).to_list())
for name, ok in report.checks:
    print(f"  {'ok ' if ok else 'FAIL'} {name}")
print(f"branch {report.branch}: |C| = {len(report.actual_C)} >= {report.derived_bound}")
