"""Slow, obviously-correct reference computations the library is checked against."""

import cmath


def pair_loop_restricted_sumset(p, A, B, S):
    A, B, S = set(A), set(B), set(S)
    return {(a + b) % p for a in A for b in B if (a - b) % p not in S}


def e_p_float(p, r):
    return cmath.exp(-2j * cmath.pi * r / p)


def dft_float(p, values):
    return [sum(complex(v) * e_p_float(p, a * x) for a, v in enumerate(values)) for x in range(p)]


def close(z, w, tol=1e-8):
    return abs(complex(z) - complex(w)) < tol
