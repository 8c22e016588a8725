import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rsumset.cyclotomic import CycNum, add, is_zero, mul, neg, root_power, scale
from rsumset.errors import ModulusError


def C(p, *coeffs):
    return CycNum.from_coeffs(p, coeffs)


def as_complex(x):
    # independent of CycNum.to_complex
    z = cmath.exp(2j * cmath.pi / x.p)
    return sum(float(c) * z ** i for i, c in enumerate(x.coeffs))


def random_cyc(p, rng, height=6, dens=(1, 1, 2, 3)):
    return CycNum.from_coeffs(p, [Fraction(rng.randint(-height, height), rng.choice(dens))
                                  for _ in range(p - 1)])


def test_root_power_examples():
    assert root_power(3, 0).coeffs == (1, 0)
    assert root_power(3, 2).coeffs == (0, 1)
    assert root_power(3, 1).coeffs == (-1, -1)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_root_power_matches_exponential(p):
    for r in range(p):
        assert abs(as_complex(root_power(p, r)) - cmath.exp(-2j * cmath.pi * r / p)) < 1e-9


def test_ring_examples():
    assert add(C(3, 1, 0), C(3, -1, 0)).is_zero()
    z = CycNum.zeta_power(3, 1)
    assert mul(z, z).coeffs == (-1, -1)
    assert mul(CycNum.zeta_power(5, 2), CycNum.zeta_power(5, 3)).coeffs == (1, 0, 0, 0)
    assert neg(C(3, 1, 2)) == C(3, -1, -2)


def test_is_zero_examples():
    z = CycNum.zeta_power(3, 1)
    assert is_zero(1 + z + z * z)
    assert not is_zero(1 + z)
    total = CycNum.zero(5)
    for r in range(5):
        total = total + root_power(5, r)
    assert is_zero(total)


def test_scale_examples():
    assert scale(C(3, 2, 0), Fraction(1, 2)) == C(3, 1, 0)
    assert scale(C(3, 5, -7), 0).is_zero()
    assert scale(C(3, 1, 1), 3) == C(3, 3, 3)


def test_normalized_rationals():
    x = C(5, Fraction(2, 4), Fraction(-3, 6), 0, Fraction(4, 2))
    assert x.coeffs == (Fraction(1, 2), Fraction(-1, 2), 0, 2)
    assert x.den == 2
    assert x.to_json() == ["1/2", "-1/2", "0/1", "2/1"]
    assert CycNum.from_json(5, x.to_json()) == x


def test_modulus_mismatch():
    with pytest.raises(ModulusError):
        CycNum.one(3) + CycNum.one(5)


def test_p2_degenerate():
    z = CycNum.zeta_power(2, 1)
    assert z == CycNum.rational(2, -1)
    assert z * z == CycNum.one(2)
    assert root_power(2, 1) == z


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_ring_axioms(p):
    rng = random.Random(p)
    for _ in range(1000):
        x, y, z = (random_cyc(p, rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x * y == y * x
        assert x + y == y + x


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_zeta_relations(p):
    z = CycNum.zeta_power(p, 1)
    acc = CycNum.one(p)
    total = CycNum.zero(p)
    for _ in range(p):
        total = total + acc
        acc = acc * z
    assert acc == CycNum.one(p)
    assert total.is_zero()


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_root_power_homomorphism(p):
    for r in range(p):
        for s in range(p):
            assert root_power(p, r) * root_power(p, s) == root_power(p, (r + s) % p)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_mul_matches_complex_values(p):
    rng = random.Random(100 + p)
    for _ in range(200):
        x, y = random_cyc(p, rng), random_cyc(p, rng)
        assert abs(as_complex(x * y) - as_complex(x) * as_complex(y)) < 1e-6


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_mul_zeta_and_inverse(p):
    rng = random.Random(7 * p)
    for _ in range(50):
        x = random_cyc(p, rng)
        k = rng.randrange(p)
        assert x.mul_zeta(k) == x * CycNum.zeta_power(p, k)
        if not x.is_zero():
            assert x * x.inverse() == CycNum.one(p)
            assert x.norm() > 0


def _expr(draw, p, depth):
    if depth == 0:
        return CycNum.from_coeffs(p, [draw(st.integers(-4, 4)) for _ in range(p - 1)])
    op = draw(st.sampled_from(["+", "-", "*", "zeta", "scale"]))
    left = _expr(draw, p, depth - 1)
    if op == "zeta":
        return left.mul_zeta(draw(st.integers(0, p - 1)))
    if op == "scale":
        return left.scale(Fraction(draw(st.integers(-3, 3)), draw(st.integers(1, 4))))
    right = _expr(draw, p, depth - 1)
    return {"+": left + right, "-": left - right, "*": left * right}[op]


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 4), st.data())
def test_deep_expressions_cancel_exactly(p, depth, data):
    x = _expr(data.draw, p, depth)
    assert (x - x).is_zero()
    assert (x + (-x)).is_zero()
