import random

import pytest

from rsumset.cyclotomic import CycNum
from rsumset.errors import PreconditionError
from rsumset.fourier import ZpFunction, convolve, dft, random_integer_function, support
from rsumset.proof import (build_F, hat_sets, hatF_expansion, is_admissible,
                           predicted_hat_support, theorem2_statement_check, trace_theorem2)
from rsumset.residue import PrimeModulus, ResidueSet
from rsumset.witness import construct_witness


def S(p, *xs):
    return ResidueSet.from_iter(p, xs)


@pytest.mark.parametrize("args,A_hat,B_hat", [
    ((5, 3, 3, 1), (0, 1, 2), (2, 3, 4)),
    ((7, 3, 4, 1), (0, 1, 2, 3, 4), (3, 4, 5, 6)),
    ((5, 5, 5, 0), (0,), (0,)),
])
def test_hat_sets_examples(args, A_hat, B_hat):
    a, b = hat_sets(*args)
    p = args[0]
    assert a == S(p, *A_hat) and b == S(p, *B_hat)


def test_hat_sets_preconditions():
    with pytest.raises(PreconditionError):
        hat_sets(5, 3, 2, 0)
    with pytest.raises(PreconditionError):
        hat_sets(5, 2, 2, 2)
    with pytest.raises(PreconditionError):
        hat_sets(2, 2, 2, 0)


def test_build_F_empty_S_is_convolution():
    d = ZpFunction.delta(5)
    assert build_F(d, d, ResidueSet.empty(5)) == d
    rng = random.Random(2)
    f, g = random_integer_function(5, rng), random_integer_function(5, rng)
    assert build_F(f, g, ResidueSet.empty(5)) == convolve(f, g)


def test_build_F_single_difference():
    # f = g = delta_0: only a = 0, x = 0 contributes, and e(0) - e(0) = 0
    d = ZpFunction.delta(3)
    assert build_F(d, d, S(3, 0)).is_zero()
    # f = delta_0, g = 1: F(x) = e_3(x) - 1
    z = CycNum.zeta_power(3, 1)
    F = build_F(d, ZpFunction.constant(3, 1), S(3, 0))
    assert F.values == (CycNum.zero(3), z * z - 1, z - 1)
    assert support(F) == S(3, 1, 2)
    Fh = dft(F)
    assert Fh[0] == CycNum.rational(3, -3)
    for x in range(3):
        assert hatF_expansion(dft(d), dft(ZpFunction.constant(3, 1)), S(3, 0), x) == Fh[x]


def test_build_F_witness_example():
    p = 5
    A = S(p, 0, 1, 2)
    a_hat, b_hat = hat_sets(p, 3, 3, 1)
    f = construct_witness(p, A, a_hat)
    g = construct_witness(p, A, b_hat)
    assert support(build_F(f, g, S(p, 0))) <= S(p, 1, 2, 3)


def test_expansion_empty_S():
    rng = random.Random(4)
    f, g = random_integer_function(5, rng), random_integer_function(5, rng)
    fh, gh = dft(f), dft(g)
    for x in range(5):
        assert hatF_expansion(fh, gh, ResidueSet.empty(5), x) == fh[x] * gh[x]


@pytest.mark.parametrize("p,max_s", [(3, 3), (5, 3), (7, 3)])
def test_expansion_identity_random(p, max_s):
    rng = random.Random(p)
    m = PrimeModulus(p)
    for _ in range(100):
        f, g = random_integer_function(p, rng), random_integer_function(p, rng)
        Sx = ResidueSet.from_iter(m, rng.sample(range(p), rng.randint(0, max_s)))
        Fh = dft(build_F(f, g, Sx))
        fh, gh = dft(f), dft(g)
        assert all(Fh[x] == hatF_expansion(fh, gh, Sx, x) for x in range(p))


def test_expansion_cap():
    p = 13
    z = ZpFunction.zero(p)
    with pytest.raises(PreconditionError):
        hatF_expansion(z, z, ResidueSet.from_iter(p, range(11)), 0)


def test_trace_examples():
    r = trace_theorem2(5, S(5, 0, 1, 2), S(5, 0, 1, 2), S(5, 0))
    assert r.derived_bound == 3 and len(r.actual_C) == 3 and r.passed
    assert len(support(r.F_hat)) <= r.context.k + r.context.l - 5 + 2
    assert r.branch == "partial"

    r = trace_theorem2(7, S(7, 0, 1, 2), S(7, 0, 1, 2, 3), S(7, 0))
    assert r.derived_bound == 4 and len(r.actual_C) == 5

    r = trace_theorem2(5, ResidueSet.full(5), ResidueSet.full(5), ResidueSet.empty(5))
    assert r.branch == "full" and r.derived_bound == 5


def test_trace_swaps_and_negates_S():
    r = trace_theorem2(7, S(7, 0, 1, 2, 3), S(7, 0, 2, 4), S(7, 1))
    assert r.context.swapped
    assert r.context.S == S(7, 6)
    names = [n for n, _ in r.checks]
    assert names[0] == "k_l_range" and "supp_F_within_C" in names and "F_hat_top_nonzero" in names


def test_trace_preconditions():
    with pytest.raises(PreconditionError):
        trace_theorem2(5, S(5, 0), S(5, 0, 1, 2), ResidueSet.empty(5))
    with pytest.raises(PreconditionError):
        trace_theorem2(5, S(5, 0, 1), S(5, 0, 1), S(5, 0, 1))
    with pytest.raises(PreconditionError):
        trace_theorem2(2, ResidueSet.full(2), ResidueSet.full(2), ResidueSet.empty(2))


def test_trace_exhaustive_p3():
    m = PrimeModulus(3)
    n = 0
    for a in range(1, 8):
        for b in range(1, 8):
            for s in range(8):
                A, B, Sx = ResidueSet(m, a), ResidueSet(m, b), ResidueSet(m, s)
                if is_admissible(3, A, B, Sx):
                    r = trace_theorem2(3, A, B, Sx)
                    assert r.passed and r.derived_bound <= len(r.actual_C)
                    n += 1
    assert n > 0


def test_branch_full_gives_singleton_support():
    p = 7
    m = PrimeModulus(p)
    rng = random.Random(0)
    hits = 0
    for _ in range(4000):
        A, B, Sx = (ResidueSet(m, rng.randrange(1 << p)) for _ in range(3))
        if not is_admissible(p, A, B, Sx) or len(A) + len(B) < p + 2 * len(Sx) + 1:
            continue
        r = trace_theorem2(p, A, B, Sx)
        top = (p - len(Sx)) % p
        assert support(r.F_hat) == ResidueSet(m, 1 << top)
        assert r.derived_bound == p
        hits += 1
    assert hits > 10


def test_predicted_support_wraps():
    # |B|-2|S| < 0: the interval wraps below zero
    assert predicted_hat_support(7, 4, 3, 4) == ResidueSet.full(7)


@pytest.mark.parametrize("p,A,B,Sx,expected", [
    (2, (0, 1), (0, 1), (), True),
    (2, (0, 1), (0, 1), (0,), True),
    (7, (3,), (0, 1, 2), (), True),
])
def test_statement_check_examples(p, A, B, Sx, expected):
    assert theorem2_statement_check(p, S(p, *A), S(p, *B), S(p, *Sx)) is expected


def test_p2_branch_values():
    full = ResidueSet.full(2)
    from rsumset.residue import restricted_sumset
    assert len(restricted_sumset(full, full, ResidueSet.empty(2))) == 2
    assert len(restricted_sumset(full, full, S(2, 0))) == 1
