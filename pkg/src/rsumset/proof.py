"""The harmonic-analysis argument for the restricted-sumset bound, run on concrete sets.

For nonempty A, B, S in Z_p with |A| + |B| > 2|S| + 1 and |A|, |B| >= 2,
``trace_theorem2`` builds the auxiliary function

    F(x) = sum_a f(a) g(x-a) prod_{d in S} (e_p(x-a) - e_p(a-d))

from witnesses f, g with interval Fourier supports, and checks every step
that turns supp(F) and supp(Fhat) into the lower bound on

    |C| = |{a+b : a in A, b in B, a-b not in S}|.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cyclotomic import CycNum, field_modulus, root_power
from .errors import CheckFailure, ModulusError, PreconditionError
from .fourier import ZpFunction, dft, support
from .residue import (PrimeModulus, ResidueSet, as_modulus, bound_table,
                      restricted_sumset)
from .witness import construct_witness, verify_witness

EXPANSION_CAP = 10


def hat_sets(p, nA: int, nB: int, nS: int) -> tuple[ResidueSet, ResidueSet]:
    """The prescribed Fourier supports {0..k-1} and {nB-nS .. p-nS} (mod p)."""
    m = as_modulus(p)
    if m.p == 2:
        raise PreconditionError("hat sets are defined for odd p")
    if not 2 <= nA <= nB <= m.p:
        raise PreconditionError(f"need 2 <= nA <= nB <= p, got nA={nA}, nB={nB}")
    if not 0 <= nS <= m.p:
        raise PreconditionError(f"nS={nS} outside [0, p]")
    if nA + nB <= 2 * nS + 1:
        raise PreconditionError(f"need nA+nB > 2nS+1, got {nA}+{nB} <= {2 * nS + 1}")
    k = m.p - nA + 1
    l = m.p - nB + 1
    return ResidueSet.interval(m, 0, k), ResidueSet.interval(m, nB - nS, l)


def build_F(f: ZpFunction, g: ZpFunction, S: ResidueSet) -> ZpFunction:
    if f.modulus != g.modulus or f.modulus != S.modulus:
        raise ModulusError("f, g and S must share the modulus")
    m = f.modulus
    p = m.p
    s = S.to_list()
    one = CycNum.one(m)
    fa = [(a, v) for a, v in enumerate(f.values) if not v.is_zero()]
    gb = [(u, v) for u, v in enumerate(g.values) if not v.is_zero()]
    out = [CycNum.zero(m) for _ in range(p)]
    for a, fv in fa:
        base = [root_power(m, a - d) for d in s]
        for u, gv in gb:
            # u = x - a
            eu = root_power(m, u)
            prod = one
            for t in base:
                prod = prod * (eu - t)
            x = (a + u) % p
            out[x] = out[x] + fv * gv * prod
    return ZpFunction(m, out)


def hatF_expansion(f_hat: ZpFunction, g_hat: ZpFunction, S: ResidueSet, x,
                   cap: int = EXPANSION_CAP) -> CycNum:
    """Fhat(x) as the sum over T subset of S of
    (-1)^|T| e_p(-sum T) fhat(x+|T|) ghat(x+|S|-|T|)."""
    if len(S) > cap:
        raise PreconditionError(f"|S|={len(S)} exceeds the expansion cap {cap}")
    m = f_hat.modulus
    x = int(x)
    s = S.to_list()
    n = len(s)
    total = CycNum.zero(m)
    for t in range(n + 1):
        coeff = CycNum.zero(m)
        for T in itertools.combinations(s, t):
            coeff = coeff + root_power(m, -sum(T))
        if coeff.is_zero():
            continue
        term = coeff * f_hat[x + t] * g_hat[x + n - t]
        total = total + term if t % 2 == 0 else total - term
    return total


@dataclass(frozen=True)
class ProofContext:
    p: PrimeModulus
    A: ResidueSet
    B: ResidueSet
    S: ResidueSet
    k: int
    l: int
    A_hat: ResidueSet
    B_hat: ResidueSet
    swapped: bool

    def to_dict(self) -> dict:
        return {"p": self.p.p, "A": self.A.to_list(), "B": self.B.to_list(), "S": self.S.to_list(),
                "k": self.k, "l": self.l, "A_hat": self.A_hat.to_list(),
                "B_hat": self.B_hat.to_list(), "swapped": self.swapped}


@dataclass
class TraceReport:
    context: ProofContext
    f: ZpFunction
    g: ZpFunction
    F: ZpFunction
    F_hat: ZpFunction
    checks: list = field(default_factory=list)
    branch: str = ""
    derived_bound: int = 0
    actual_C: ResidueSet | None = None

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def to_dict(self) -> dict:
        return {
            "context": self.context.to_dict(),
            "f": self.f.to_json(),
            "g": self.g.to_json(),
            "F": self.F.to_json(),
            "F_hat": self.F_hat.to_json(),
            "checks": [{"name": n, "passed": ok} for n, ok in self.checks],
            "branch": self.branch,
            "derived_bound": self.derived_bound,
            "actual_C": self.actual_C.to_list(),
            "actual_C_size": len(self.actual_C),
            "passed": self.passed,
        }


def predicted_hat_support(p: int, nB: int, nS: int, k: int) -> ResidueSet:
    """{p-nS} together with r mod p for nB-2nS <= r <= k-1."""
    mask = 1 << ((p - nS) % p)
    for r in range(nB - 2 * nS, k):
        mask |= 1 << (r % p)
    return ResidueSet(as_modulus(p), mask)


def _admissible(p, A: ResidueSet, B: ResidueSet, S: ResidueSet) -> PrimeModulus:
    m = field_modulus(p)
    for X in (A, B, S):
        if X.modulus != m:
            raise ModulusError("A, B and S must live in Z_p for the given p")
    if m.p == 2:
        raise PreconditionError("the trace runs for odd p; p=2 is settled by direct case analysis")
    if not A or not B:
        raise PreconditionError("A and B must be nonempty")
    if min(len(A), len(B)) < 2:
        raise PreconditionError("min(|A|,|B|) = 1: the bound holds trivially, nothing to trace")
    if len(A) + len(B) <= 2 * len(S) + 1:
        raise PreconditionError(
            f"|A|+|B| = {len(A) + len(B)} <= 2|S|+1 = {2 * len(S) + 1}: the bound holds trivially")
    return m


def is_admissible(p, A, B, S) -> bool:
    try:
        _admissible(p, A, B, S)
    except (PreconditionError, ModulusError):
        return False
    return True


def trace_theorem2(p, A: ResidueSet, B: ResidueSet, S: ResidueSet, seed: int = 0) -> TraceReport:
    """Run the argument on (A, B, S) and return every checkpoint.

    Raises CheckFailure naming the first failed checkpoint; the failure
    carries the partial report as ``.payload``.
    """
    m = _admissible(p, A, B, S)
    p = m.p
    C_orig = restricted_sumset(A, B, S)
    swapped = len(A) > len(B)
    if swapped:
        # C(A, B, S) = C(B, A, -S)
        A, B, S = B, A, S.negate()
    nA, nB, nS = len(A), len(B), len(S)
    k, l = p - nA + 1, p - nB + 1
    A_hat, B_hat = hat_sets(m, nA, nB, nS)
    ctx = ProofContext(m, A, B, S, k, l, A_hat, B_hat, swapped)
    checks = []

    def check(name, ok):
        checks.append((name, bool(ok)))

    check("k_l_range", 1 <= k <= p - 1 and 1 <= l <= p - 1)
    check("hat_sizes", len(A_hat) == p + 1 - nA and len(B_hat) == p + 1 - nB)
    check("k_plus_l_bound", k + l <= 2 * p - 2 * nS and l <= p - nS)

    f = construct_witness(m, A, A_hat, seed)
    g = construct_witness(m, B, B_hat, seed)
    f_hat, g_hat = dft(f), dft(g)
    check("witness_f_supports", support(f) == A and support(f_hat) == A_hat)
    check("witness_g_supports", support(g) == B and support(g_hat) == B_hat)

    F = build_F(f, g, S)
    F_hat = dft(F)
    C = restricted_sumset(A, B, S)
    check("swap_invariance", C == C_orig)
    supp_F, supp_F_hat = support(F), support(F_hat)
    check("supp_F_within_C", supp_F <= C)

    check("expansion_identity",
          all(F_hat[x] == hatF_expansion(f_hat, g_hat, S, x) for x in range(p)))

    top = (p - nS) % p
    lead = f_hat[0] * g_hat[top] * root_power(m, -sum(S.to_list()))
    if nS % 2:
        lead = -lead
    check("F_hat_top_term", F_hat[top] == lead)
    check("F_hat_top_nonzero", not F_hat[top].is_zero())

    predicted = predicted_hat_support(p, nB, nS, k)
    check("supp_F_hat_predicted", supp_F_hat <= predicted)
    check("uncertainty_F", len(supp_F) + len(supp_F_hat) >= p + 1)

    if nA + nB >= p + 2 * nS + 1:
        branch = "full"
        check("branch_full_singleton", supp_F_hat == ResidueSet(m, 1 << top))
        bound = p
    else:
        branch = "partial"
        check("branch_partial_count", len(supp_F_hat) <= k + l - p + 2 * nS)
        bound = nA + nB - 2 * nS - 1
    check("bound_chain", p + 1 - len(supp_F_hat) >= bound and len(supp_F) >= bound)
    check("bound_matches_table", bound == bound_table(m, nA, nB, nS).thm2)
    check("C_meets_bound", len(C) >= bound)

    report = TraceReport(ctx, f, g, F, F_hat, checks, branch, bound, C)
    for name, ok in checks:
        if not ok:
            err = CheckFailure(name, f"p={p} A={A.to_list()} B={B.to_list()} S={S.to_list()}")
            err.payload = report
            raise err
    return report


def theorem2_statement_check(p, A: ResidueSet, B: ResidueSet, S: ResidueSet) -> bool:
    """|C| >= min{p, |A|+|B|-2|S|-1} (clamped at 0), by direct computation.

    Covers every prime including 2 and the size ranges the argument treats as
    trivial.
    """
    m = as_modulus(p)
    if not A or not B:
        raise PreconditionError("A and B must be nonempty")
    C = restricted_sumset(A, B, S)
    return len(C) >= bound_table(m, len(A), len(B), len(S)).thm2
