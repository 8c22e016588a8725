"""Functions Z_p -> Q(zeta_p), their exact Fourier transform, and supports.

The transform uses the convention

    fhat(x) = sum_a f(a) e_p(a x),    e_p(r) = exp(-2 pi i r / p),

so the inverse carries e_p(-a x) and a factor 1/p.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .cyclotomic import CycNum, _reduce_cyclic
from .errors import ModulusError, PreconditionError
from .residue import PrimeModulus, ResidueSet, as_modulus


class ZpFunction:
    __slots__ = ("modulus", "values")

    def __init__(self, modulus, values: Sequence[CycNum]):
        modulus = as_modulus(modulus)
        values = tuple(values)
        if len(values) != modulus.p:
            raise ValueError(f"a function on Z_{modulus.p} needs {modulus.p} values, got {len(values)}")
        for v in values:
            if v.modulus != modulus:
                raise ModulusError(f"value over p={v.p} in a function over p={modulus.p}")
        self.modulus = modulus
        self.values = values

    @classmethod
    def from_values(cls, p, values: Iterable) -> "ZpFunction":
        """Accepts CycNums, ints or Fractions."""
        m = as_modulus(p)
        return cls(m, [v if isinstance(v, CycNum) else CycNum.rational(m, v) for v in values])

    @classmethod
    def zero(cls, p) -> "ZpFunction":
        m = as_modulus(p)
        z = CycNum.zero(m)
        return cls(m, [z] * m.p)

    @classmethod
    def delta(cls, p, at: int = 0) -> "ZpFunction":
        m = as_modulus(p)
        return cls.from_values(m, [1 if x == at % m.p else 0 for x in range(m.p)])

    @classmethod
    def constant(cls, p, c=1) -> "ZpFunction":
        m = as_modulus(p)
        return cls.from_values(m, [c] * m.p)

    @property
    def p(self) -> int:
        return self.modulus.p

    def __getitem__(self, x) -> CycNum:
        return self.values[int(x) % self.p]

    def __len__(self):
        return self.p

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if not isinstance(other, ZpFunction):
            return NotImplemented
        return self.modulus == other.modulus and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"ZpFunction(p={self.p}, {list(self.values)!r})"

    def _check(self, other):
        if self.modulus != other.modulus:
            raise ModulusError(f"modulus mismatch: {self.p} vs {other.p}")

    def __add__(self, other):
        self._check(other)
        return ZpFunction(self.modulus, [x + y for x, y in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check(other)
        return ZpFunction(self.modulus, [x - y for x, y in zip(self.values, other.values)])

    def __neg__(self):
        return ZpFunction(self.modulus, [-x for x in self.values])

    def scale(self, c) -> "ZpFunction":
        """Multiply every value by a rational or a CycNum."""
        return ZpFunction(self.modulus, [v * c for v in self.values])

    def pointwise(self, other) -> "ZpFunction":
        self._check(other)
        return ZpFunction(self.modulus, [x * y for x, y in zip(self.values, other.values)])

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def primitive(self) -> "ZpFunction":
        """The positive rational multiple with coprime integer coordinates.

        Supports are unchanged; the point is to keep later arithmetic on
        small integers.
        """
        if self.is_zero():
            return self
        den = 1
        for v in self.values:
            den = den * v.den // gcd(den, v.den)
        ints = [[x * (den // v.den) for x in v.num] for v in self.values]
        g = 0
        for row in ints:
            g = gcd(g, *row)
        return ZpFunction(self.modulus, [CycNum(self.modulus, tuple(x // g for x in row), 1) for row in ints])

    def to_json(self) -> list[list[str]]:
        return [v.to_json() for v in self.values]

    @classmethod
    def from_json(cls, p, data) -> "ZpFunction":
        m = as_modulus(p)
        return cls(m, [CycNum.from_json(m, v) for v in data])


def _transform(f: ZpFunction, sign: int) -> list[CycNum]:
    # out(x) = sum_a f(a) zeta^(sign*a*x), computed on a common denominator
    p = f.p
    m = f.modulus
    den = 1
    for v in f.values:
        den = den * v.den // gcd(den, v.den)
    rows = []
    for a, v in enumerate(f.values):
        if v.is_zero():
            continue
        k = den // v.den
        rows.append((a, [x * k for x in v.num]))
    out = []
    for x in range(p):
        acc = [0] * p
        for a, coeffs in rows:
            shift = sign * a * x % p
            for i, c in enumerate(coeffs):
                if c:
                    j = i + shift
                    if j >= p:
                        j -= p
                    acc[j] += c
        out.append(CycNum._make(m, _reduce_cyclic(acc), den))
    return out


def dft(f: ZpFunction) -> ZpFunction:
    """fhat(x) = sum_a f(a) e_p(a x), exactly."""
    return ZpFunction(f.modulus, _transform(f, -1))


def idft(g: ZpFunction) -> ZpFunction:
    """Inverse of :func:`dft`: f(a) = (1/p) sum_x g(x) e_p(-a x)."""
    inv_p = Fraction(1, g.p)
    return ZpFunction(g.modulus, [v.scale(inv_p) for v in _transform(g, 1)])


def support(f: ZpFunction) -> ResidueSet:
    mask = 0
    for x, v in enumerate(f.values):
        if not v.is_zero():
            mask |= 1 << x
    return ResidueSet(f.modulus, mask)


def convolve(f: ZpFunction, g: ZpFunction) -> ZpFunction:
    """h(x) = sum_a f(a) g(x - a)."""
    f._check(g)
    p = f.p
    out = []
    for x in range(p):
        acc = CycNum.zero(f.modulus)
        for a in range(p):
            fa, gb = f.values[a], g.values[(x - a) % p]
            if not fa.is_zero() and not gb.is_zero():
                acc = acc + fa * gb
        out.append(acc)
    return ZpFunction(f.modulus, out)


@dataclass(frozen=True)
class UncertaintyResult:
    lhs: int
    holds: bool
    support_f: ResidueSet
    support_fhat: ResidueSet

    def to_dict(self) -> dict:
        return {"lhs": self.lhs, "holds": self.holds,
                "support_f": self.support_f.to_list(), "support_fhat": self.support_fhat.to_list()}


def uncertainty_check(f: ZpFunction) -> UncertaintyResult:
    """Compare |supp f| + |supp fhat| against p + 1."""
    if f.p == 2:
        raise PreconditionError("the uncertainty check is stated for odd p")
    if f.is_zero():
        raise PreconditionError("f is identically zero")
    sf = support(f)
    sfh = support(dft(f))
    lhs = len(sf) + len(sfh)
    return UncertaintyResult(lhs, lhs >= f.p + 1, sf, sfh)


def random_integer_function(p, rng: random.Random, lo: int = -5, hi: int = 5,
                            nonzero: bool = True) -> ZpFunction:
    m = as_modulus(p)
    while True:
        vals = [rng.randint(lo, hi) for _ in range(m.p)]
        if not nonzero or any(vals):
            return ZpFunction.from_values(m, vals)
