"""Exact arithmetic in the cyclotomic field Q(zeta_p).

Numbers are kept in the power basis 1, zeta, ..., zeta^(p-2). Since the p-th
cyclotomic polynomial is irreducible this basis is a Q-basis, so every element
has exactly one coordinate vector and zero testing is a coefficient check.

Internally a number is an integer vector plus one positive common denominator,
reduced so the gcd of the denominator and all numerators is 1. That is the
same information as a vector of reduced fractions, but multiplication works on
plain ints.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd
from typing import Iterable

from .errors import ModulusError
from .residue import PrimeModulus, as_modulus

FIELD_PRIME_CEILING = int(os.environ.get("RSUMSET_FIELD_PRIME_CEILING", "31"))


def field_modulus(p, ceiling: int | None = None) -> PrimeModulus:
    m = as_modulus(p)
    ceiling = FIELD_PRIME_CEILING if ceiling is None else ceiling
    if m.p > ceiling:
        raise ModulusError(f"p={m.p} exceeds the field prime ceiling {ceiling}")
    return m


def _reduce_cyclic(c: list[int]) -> list[int]:
    # zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
    top = c[-1]
    if top:
        return [x - top for x in c[:-1]]
    return c[:-1]


class CycNum:
    """An element of Q(zeta_p), zeta_p = exp(2*pi*i/p)."""

    __slots__ = ("modulus", "num", "den")

    def __init__(self, modulus: PrimeModulus, num: tuple, den: int = 1):
        # Callers outside this module should go through the classmethods.
        self.modulus = modulus
        self.num = num
        self.den = den

    @classmethod
    def _make(cls, modulus, num, den=1) -> "CycNum":
        if den < 0:
            den = -den
            num = [-x for x in num]
        g = gcd(den, *num)
        if g != 1:
            num = [x // g for x in num]
            den //= g
        return cls(modulus, tuple(num), den)

    @classmethod
    def from_coeffs(cls, p, coeffs: Iterable) -> "CycNum":
        """Build from power-basis coordinates (ints, Fractions or "n/d" strings)."""
        m = as_modulus(p)
        fr = [Fraction(c) for c in coeffs]
        if len(fr) != max(m.p - 1, 1):
            raise ValueError(f"expected {max(m.p - 1, 1)} coefficients, got {len(fr)}")
        den = 1
        for f in fr:
            den = den * f.denominator // gcd(den, f.denominator)
        return cls._make(m, [int(f * den) for f in fr], den)

    @classmethod
    def zero(cls, p) -> "CycNum":
        m = as_modulus(p)
        return cls(m, (0,) * max(m.p - 1, 1), 1)

    @classmethod
    def rational(cls, p, q) -> "CycNum":
        m = as_modulus(p)
        q = Fraction(q)
        num = [0] * max(m.p - 1, 1)
        num[0] = q.numerator
        return cls(m, tuple(num), q.denominator)

    @classmethod
    def one(cls, p) -> "CycNum":
        return cls.rational(p, 1)

    @classmethod
    def zeta_power(cls, p, k: int) -> "CycNum":
        m = as_modulus(p)
        c = [0] * m.p
        c[k % m.p] = 1
        return cls(m, tuple(_reduce_cyclic(c)), 1)

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def _check(self, other: "CycNum"):
        if self.modulus != other.modulus:
            raise ModulusError(f"modulus mismatch: {self.p} vs {other.p}")

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.rational(self.modulus, other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.modulus == other.modulus and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.modulus.p, self.num, self.den))

    def __repr__(self):
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"CycNum(p={self.p}, ({terms}))"

    def _coerce(self, other) -> "CycNum":
        if isinstance(other, (int, Fraction)):
            return CycNum.rational(self.modulus, other)
        self._check(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if self.den == other.den:
            return CycNum._make(self.modulus, [x + y for x, y in zip(self.num, other.num)], self.den)
        d1, d2 = self.den, other.den
        return CycNum._make(self.modulus, [x * d2 + y * d1 for x, y in zip(self.num, other.num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.modulus, tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        p = self.p
        if p == 2:
            return CycNum._make(self.modulus, [self.num[0] * other.num[0]], self.den * other.den)
        c = [0] * p
        b = other.num
        nz_b = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(self.num):
            if x:
                for j, y in nz_b:
                    k = i + j
                    if k >= p:
                        k -= p
                    c[k] += x * y
        return CycNum._make(self.modulus, _reduce_cyclic(c), self.den * other.den)

    __rmul__ = __mul__

    def scale(self, q) -> "CycNum":
        q = Fraction(q)
        return CycNum._make(self.modulus, [x * q.numerator for x in self.num], self.den * q.denominator)

    def mul_zeta(self, k: int) -> "CycNum":
        """Multiply by zeta^k; a rotation of the cyclic coordinates."""
        p = self.p
        k %= p
        if k == 0:
            return self
        if p == 2:
            return -self
        c = list(self.num) + [0]
        c = c[p - k:] + c[:p - k]
        # Multiplying by a unit of Z[zeta] keeps the content, so no gcd pass.
        return CycNum(self.modulus, tuple(_reduce_cyclic(c)), self.den)

    def galois(self, k: int) -> "CycNum":
        """Apply the automorphism zeta -> zeta^k (k a unit mod p)."""
        p = self.p
        k %= p
        if k == 0:
            raise ValueError("galois automorphism needs k != 0 mod p")
        if p == 2:
            return self
        c = [0] * p
        for i, x in enumerate(self.num):
            c[i * k % p] += x
        return CycNum(self.modulus, tuple(_reduce_cyclic(c)), self.den)

    def conjugate(self) -> "CycNum":
        """Complex conjugation, which is zeta -> zeta^-1."""
        return self.galois(-1)

    def norm(self) -> Fraction:
        """Field norm down to Q: the product of all Galois conjugates."""
        prod = self
        for k in range(2, self.p):
            prod = prod * self.galois(k)
        if not prod.is_rational():
            raise ArithmeticError("norm did not land in Q; arithmetic is broken")
        return Fraction(prod.num[0], prod.den)

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_p)")
        if self.is_rational():
            return CycNum.rational(self.modulus, 1 / Fraction(self.num[0], self.den))
        # alpha^-1 = (product of the other conjugates) / N(alpha)
        rest = CycNum.one(self.modulus)
        for k in range(2, self.p):
            rest = rest * self.galois(k)
        n = self * rest
        return rest.scale(1 / Fraction(n.num[0], n.den))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        return self * other.inverse()

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, p, data: list[str]) -> "CycNum":
        return cls.from_coeffs(p, data)

    def to_complex(self) -> complex:
        """Floating-point value, for display only; nothing decides on it."""
        import cmath

        z = cmath.exp(2j * cmath.pi / self.p)
        return sum(float(c) * z ** i for i, c in enumerate(self.coeffs))


def root_power(p, r) -> CycNum:
    """e_p(r) = exp(-2*pi*i*r/p), i.e. zeta^((-r) mod p)."""
    m = as_modulus(p)
    return CycNum.zeta_power(m, -int(r))


def add(x: CycNum, y: CycNum) -> CycNum:
    return x + y


def mul(x: CycNum, y: CycNum) -> CycNum:
    return x * y


def neg(x: CycNum) -> CycNum:
    return -x


def scale(x: CycNum, q) -> CycNum:
    return x.scale(q)


def is_zero(x: CycNum) -> bool:
    return x.is_zero()
