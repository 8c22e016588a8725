"""Functions with prescribed support and prescribed Fourier support.

Given A, B in Z_p with |A| + |B| >= p + 1, a function f with supp(f) = A and
supp(fhat) = B exists. We find one by computing the space of functions that
vanish off A and whose transform vanishes off B (a linear system over
Q(zeta_p)), then taking integer combinations of a nullspace basis until the
supports come out exactly right. The containments are linear and hold for the
whole nullspace; equality is what needs a generic choice, and it is checked
exactly every time.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .cyclotomic import CycNum, field_modulus, root_power
from .errors import CheckFailure, PreconditionError
from .fourier import ZpFunction, dft, support
from .residue import PrimeModulus, ResidueSet

RETRY_CAP = 64
FALLBACK_MAX_COEFF = 8


def nullspace(rows: list[list[CycNum]], ncols: int, modulus: PrimeModulus) -> tuple[list[list[CycNum]], int]:
    """Right nullspace basis of a matrix over Q(zeta_p), by exact reduction to RREF.

    Returns (basis, rank). Basis vectors are indexed by free column, in
    increasing order, with a 1 in their own free column.
    """
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        cand = [i for i in range(r, len(m)) if not m[i][c].is_zero()]
        if not cand:
            continue
        # rational pivots are cheap to invert
        piv = next((i for i in cand if m[i][c].is_rational()), cand[0])
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [v * inv if not v.is_zero() else v for v in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][c].is_zero():
                fac = m[i][c]
                m[i] = [a - fac * b if not b.is_zero() else a for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    rank = len(pivots)
    zero = CycNum.zero(modulus)
    one = CycNum.one(modulus)
    basis = []
    for j in range(ncols):
        if j in pivots:
            continue
        v = [zero] * ncols
        v[j] = one
        for i, c in enumerate(pivots):
            v[c] = -m[i][j]
        basis.append(v)
    return basis, rank


@dataclass(frozen=True)
class SupportSystem:
    modulus: PrimeModulus
    A: ResidueSet
    B: ResidueSet
    constraint_matrix: list = field(repr=False)
    nullspace_basis: list
    rank: int

    @property
    def dimension(self) -> int:
        return len(self.nullspace_basis)

    def describe(self) -> str:
        return (f"p={self.modulus.p} A={self.A.to_list()} B={self.B.to_list()} "
                f"rank={self.rank} dim={self.dimension} "
                f"basis={[v.to_json() for v in self.nullspace_basis]}")


def _check_inputs(p, A: ResidueSet, B: ResidueSet) -> PrimeModulus:
    m = field_modulus(p)
    if m.p == 2:
        raise PreconditionError("witness construction needs an odd prime")
    if A.modulus != m or B.modulus != m:
        raise PreconditionError("A and B must live in Z_p for the given p")
    if not A or not B:
        raise PreconditionError("A and B must be nonempty")
    if len(A) + len(B) < m.p + 1:
        raise PreconditionError(f"|A|+|B| = {len(A) + len(B)} < p+1 = {m.p + 1}")
    return m


def solve_support_system(p, A: ResidueSet, B: ResidueSet) -> SupportSystem:
    m = _check_inputs(p, A, B)
    zero, one = CycNum.zero(m), CycNum.one(m)
    rows = []
    for x in range(m.p):
        if x not in A:
            rows.append([one if a == x else zero for a in range(m.p)])
    for y in range(m.p):
        if y not in B:
            rows.append([root_power(m, a * y) for a in range(m.p)])
    basis, rank = nullspace(rows, m.p, m)
    return SupportSystem(m, A, B, rows, [ZpFunction(m, v) for v in basis], rank)


def verify_witness(f: ZpFunction, A: ResidueSet, B: ResidueSet) -> bool:
    return support(f) == A and support(dft(f)) == B


def _combine(basis: list[ZpFunction], coeffs) -> ZpFunction:
    out = basis[0].scale(coeffs[0])
    for v, c in zip(basis[1:], coeffs[1:]):
        out = out + v.scale(c)
    return out


def construct_witness(p, A: ResidueSet, B: ResidueSet, seed: int = 0,
                      retry_cap: int = RETRY_CAP) -> ZpFunction:
    """A function f with supp(f) = A and supp(dft(f)) = B, exactly.

    Seeded random positive integer combinations of the nullspace basis are
    tried first; after ``retry_cap`` misses, small coefficient tuples are
    enumerated in lexicographic order. The result is scaled to coprime
    integer coordinates.
    """
    _check_inputs(p, A, B)
    return _construct_witness(A, B, seed, retry_cap)


@lru_cache(maxsize=4096)
def _construct_witness(A: ResidueSet, B: ResidueSet, seed: int, retry_cap: int) -> ZpFunction:
    system = solve_support_system(A.modulus, A, B)
    basis = system.nullspace_basis
    dim = len(basis)
    if dim < len(A) + len(B) - A.p:
        raise CheckFailure("nullspace_dimension", system.describe())
    rng = random.Random(seed)
    hi = A.p * dim
    for _ in range(retry_cap):
        f = _combine(basis, [rng.randint(1, hi) for _ in range(dim)])
        if verify_witness(f, A, B):
            return f.primitive()
    for bound in range(1, FALLBACK_MAX_COEFF + 1):
        for coeffs in itertools.product(range(1, bound + 1), repeat=dim):
            if max(coeffs) != bound:
                continue
            f = _combine(basis, coeffs)
            if verify_witness(f, A, B):
                return f.primitive()
    raise CheckFailure("witness_search", system.describe())


def clear_cache():
    _construct_witness.cache_clear()
