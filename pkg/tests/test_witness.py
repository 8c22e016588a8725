import itertools
import random

import pytest

from rsumset.cyclotomic import CycNum
from rsumset.errors import PreconditionError
from rsumset.fourier import ZpFunction, dft, support
from rsumset.residue import PrimeModulus, ResidueSet
from rsumset.witness import (clear_cache, construct_witness, solve_support_system,
                             verify_witness)


def S(p, *xs):
    return ResidueSet.from_iter(p, xs)


def spans(basis, v):
    """Whether v lies in the span of a one-element basis."""
    (b,) = basis
    j = next(i for i, x in enumerate(b.values) if not x.is_zero())
    ratio = v.values[j] / b.values[j]
    return b.scale(ratio) == v


def test_solve_examples():
    sys_ = solve_support_system(3, S(3, 0), ResidueSet.full(3))
    assert sys_.dimension == 1 and spans(sys_.nullspace_basis, ZpFunction.delta(3))
    sys_ = solve_support_system(3, ResidueSet.full(3), S(3, 0))
    assert sys_.dimension == 1 and spans(sys_.nullspace_basis, ZpFunction.constant(3))
    sys_ = solve_support_system(3, S(3, 0, 1), S(3, 0, 1))
    z = CycNum.zeta_power(3, 1)
    f = ZpFunction(3, [-z, CycNum.one(3), CycNum.zero(3)])
    assert sys_.dimension == 1 and spans(sys_.nullspace_basis, f)
    assert len(sys_.constraint_matrix) == (3 - 2) + (3 - 2)


def test_construct_examples():
    f = construct_witness(3, ResidueSet.full(3), S(3, 0))
    assert f.values[0] == f.values[1] == f.values[2] and not f.values[0].is_zero()
    assert construct_witness(3, S(3, 0), ResidueSet.full(3)) == ZpFunction.delta(3)
    f = construct_witness(3, S(3, 0, 1), S(3, 0, 1))
    z = CycNum.zeta_power(3, 1)
    assert f == ZpFunction(3, [-z, CycNum.one(3), CycNum.zero(3)])
    fh = dft(f)
    assert fh.values == (1 - z, z * z - z, CycNum.zero(3))


def test_verify_examples():
    assert verify_witness(ZpFunction.delta(5), S(5, 0), ResidueSet.full(5))
    assert not verify_witness(ZpFunction.delta(5), S(5, 0), S(5, 0))
    assert verify_witness(ZpFunction.constant(5, 1), ResidueSet.full(5), S(5, 0))


def test_preconditions():
    with pytest.raises(PreconditionError):
        solve_support_system(5, S(5, 0, 1), S(5, 0, 1))
    with pytest.raises(PreconditionError):
        construct_witness(2, ResidueSet.full(2), ResidueSet.full(2))
    with pytest.raises(PreconditionError):
        construct_witness(3, ResidueSet.empty(3), ResidueSet.full(3))


def _pairs(p):
    m = PrimeModulus(p)
    sets = [ResidueSet(m, mask) for mask in range(1, 1 << p)]
    return [(A, B) for A in sets for B in sets if len(A) + len(B) >= p + 1]


@pytest.mark.parametrize("p", [3, 5])
def test_basis_vectors_satisfy_containments(p):
    for A, B in _pairs(p):
        sys_ = solve_support_system(p, A, B)
        assert sys_.dimension == p - sys_.rank >= len(A) + len(B) - p
        for v in sys_.nullspace_basis:
            assert support(v) <= A and support(dft(v)) <= B


@pytest.mark.parametrize("p", [3, 5])
def test_exhaustive_small(p):
    for A, B in _pairs(p):
        assert verify_witness(construct_witness(p, A, B, seed=1), A, B)


def test_json_roundtrip_keeps_witness():
    A, B = S(7, 0, 2, 3, 5), S(7, 1, 2, 4, 6)
    f = construct_witness(7, A, B, seed=9)
    g = ZpFunction.from_json(7, f.to_json())
    assert g == f and verify_witness(g, A, B)


def test_seeded_determinism():
    A, B = S(11, 0, 1, 3, 4, 8, 9), S(11, 0, 2, 5, 6, 7, 10)
    f = construct_witness(11, A, B, seed=4)
    clear_cache()
    assert construct_witness(11, A, B, seed=4) == f


def test_fallback_enumeration_is_used_when_retries_are_disabled():
    A, B = S(5, 0, 1, 2), S(5, 1, 2, 4)
    f = construct_witness(5, A, B, seed=0, retry_cap=0)
    assert verify_witness(f, A, B)
