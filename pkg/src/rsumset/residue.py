"""Residues mod a prime, bitmask subsets of Z_p, sumsets and closed-form bounds.

A subset X of Z_p is stored as an int whose bit ``x`` is set iff ``x`` is in X.
Translation by ``t`` is then a cyclic rotation of the low ``p`` bits, which is
what makes the restricted sumset cheap enough for exhaustive scans.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

from .errors import ModulusError, PreconditionError

SET_PRIME_CEILING = int(os.environ.get("RSUMSET_SET_PRIME_CEILING", "61"))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeModulus:
    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise ModulusError(f"modulus must be an integer, got {self.p!r}")
        if not is_prime(self.p):
            raise ModulusError(f"p={self.p} is not prime")

    def __int__(self):
        return self.p

    def __index__(self):
        return self.p

    @property
    def full_mask(self) -> int:
        return (1 << self.p) - 1

    def check_ceiling(self, ceiling: int | None = None) -> "PrimeModulus":
        ceiling = SET_PRIME_CEILING if ceiling is None else ceiling
        if self.p > ceiling:
            raise ModulusError(f"p={self.p} exceeds the prime ceiling {ceiling}")
        return self


def as_modulus(p) -> PrimeModulus:
    if isinstance(p, PrimeModulus):
        return p
    return PrimeModulus(int(p) if not isinstance(p, bool) else p)


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: PrimeModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.p:
            raise ValueError(f"{self.value} is not a canonical residue mod {self.modulus.p}")

    @classmethod
    def of(cls, r: int, p) -> "Residue":
        m = as_modulus(p)
        return cls(int(r) % m.p, m)

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __add__(self, other):
        return Residue((self.value + int(other)) % self.modulus.p, self.modulus)

    def __sub__(self, other):
        return Residue((self.value - int(other)) % self.modulus.p, self.modulus)

    def __mul__(self, other):
        return Residue((self.value * int(other)) % self.modulus.p, self.modulus)

    def __neg__(self):
        return Residue(-self.value % self.modulus.p, self.modulus)


def rotate(mask: int, t: int, p: int) -> int:
    """Translate the set encoded by ``mask`` by ``t`` in Z_p."""
    t %= p
    if t == 0:
        return mask
    return ((mask << t) | (mask >> (p - t))) & ((1 << p) - 1)


def negate_mask(mask: int, p: int) -> int:
    out = mask & 1
    for x in range(1, p):
        if mask >> x & 1:
            out |= 1 << (p - x)
    return out


def dilate_mask(mask: int, u: int, p: int) -> int:
    out = 0
    for x in range(p):
        if mask >> x & 1:
            out |= 1 << (u * x % p)
    return out


def mask_elements(mask: int) -> list[int]:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return out


def restricted_sumset_mask(a_mask: int, b_mask: int, s_mask: int, p: int) -> int:
    """Bitmask of {a+b : a in A, b in B, a-b not in S}.

    For each a the admissible partners are B minus (a - S), and a - S is the
    rotation of -S by a.
    """
    full = (1 << p) - 1
    neg_s = negate_mask(s_mask, p)
    out = 0
    x = 0
    while a_mask:
        if a_mask & 1:
            out |= rotate(b_mask & ~rotate(neg_s, x, p) & full, x, p)
        a_mask >>= 1
        x += 1
    return out


@dataclass(frozen=True)
class ResidueSet:
    modulus: PrimeModulus
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.modulus.p:
            raise ValueError(f"mask {self.mask:#x} has bits outside 0..{self.modulus.p - 1}")

    @classmethod
    def from_iter(cls, p, elements: Iterable[int]) -> "ResidueSet":
        m = as_modulus(p)
        mask = 0
        for x in elements:
            mask |= 1 << (int(x) % m.p)
        return cls(m, mask)

    @classmethod
    def parse(cls, p, text: str) -> "ResidueSet":
        """Parse a literal such as ``"0,1,2"``.

        Entries must be canonical residues and may not repeat. The empty
        string denotes the empty set.
        """
        m = as_modulus(p)
        text = text.strip()
        if not text:
            return cls(m, 0)
        mask = 0
        for tok in text.split(","):
            tok = tok.strip()
            try:
                x = int(tok)
            except ValueError:
                raise ValueError(f"malformed set element {tok!r}") from None
            if not 0 <= x < m.p:
                raise ValueError(f"{x} is not a canonical residue mod {m.p}")
            if mask >> x & 1:
                raise ValueError(f"duplicate element {x} in set literal")
            mask |= 1 << x
        return cls(m, mask)

    @classmethod
    def empty(cls, p) -> "ResidueSet":
        return cls(as_modulus(p), 0)

    @classmethod
    def full(cls, p) -> "ResidueSet":
        m = as_modulus(p)
        return cls(m, m.full_mask)

    @classmethod
    def interval(cls, p, start: int, length: int) -> "ResidueSet":
        """The ``length`` consecutive residues start, start+1, ... taken mod p."""
        m = as_modulus(p)
        if not 0 <= length <= m.p:
            raise ValueError(f"interval length {length} outside [0, {m.p}]")
        return cls(m, rotate((1 << length) - 1, start, m.p))

    @property
    def p(self) -> int:
        return self.modulus.p

    def __len__(self):
        return self.mask.bit_count()

    def cardinality(self) -> int:
        return len(self)

    def __iter__(self):
        return iter(mask_elements(self.mask))

    def __contains__(self, x):
        return bool(self.mask >> (int(x) % self.p) & 1)

    def __bool__(self):
        return self.mask != 0

    def to_list(self) -> list[int]:
        return mask_elements(self.mask)

    def __repr__(self):
        return f"ResidueSet(p={self.p}, {{{', '.join(map(str, self))}}})"

    def _check(self, other: "ResidueSet"):
        if self.modulus != other.modulus:
            raise ModulusError(f"modulus mismatch: {self.p} vs {other.p}")

    def __or__(self, other):
        self._check(other)
        return ResidueSet(self.modulus, self.mask | other.mask)

    def __and__(self, other):
        self._check(other)
        return ResidueSet(self.modulus, self.mask & other.mask)

    def __sub__(self, other):
        self._check(other)
        return ResidueSet(self.modulus, self.mask & ~other.mask)

    def __le__(self, other):
        self._check(other)
        return self.mask & ~other.mask == 0

    def complement(self) -> "ResidueSet":
        return ResidueSet(self.modulus, self.modulus.full_mask & ~self.mask)

    def shift(self, t: int) -> "ResidueSet":
        return ResidueSet(self.modulus, rotate(self.mask, int(t), self.p))

    def dilate(self, u: int) -> "ResidueSet":
        return ResidueSet(self.modulus, dilate_mask(self.mask, int(u) % self.p, self.p))

    def negate(self) -> "ResidueSet":
        return ResidueSet(self.modulus, negate_mask(self.mask, self.p))


def _same_modulus(*sets: ResidueSet) -> PrimeModulus:
    m = sets[0].modulus
    for s in sets[1:]:
        if s.modulus != m:
            raise ModulusError(f"modulus mismatch: {m.p} vs {s.modulus.p}")
    return m


def sumset(A: ResidueSet, B: ResidueSet) -> ResidueSet:
    m = _same_modulus(A, B)
    return ResidueSet(m, restricted_sumset_mask(A.mask, B.mask, 0, m.p))


def restricted_sumset(A: ResidueSet, B: ResidueSet, S: ResidueSet) -> ResidueSet:
    """C = {a+b : a in A, b in B, a-b not in S}."""
    m = _same_modulus(A, B, S)
    return ResidueSet(m, restricted_sumset_mask(A.mask, B.mask, S.mask, m.p))


def strict_sumset(A: ResidueSet, B: ResidueSet) -> ResidueSet:
    m = _same_modulus(A, B)
    return ResidueSet(m, restricted_sumset_mask(A.mask, B.mask, 1, m.p))


def affine_image(X: ResidueSet, u, t) -> ResidueSet:
    """{u*x + t : x in X}; u must be a unit."""
    p = X.p
    u = int(u) % p
    if u == 0:
        raise PreconditionError("affine_image needs u != 0 mod p")
    return ResidueSet(X.modulus, rotate(dilate_mask(X.mask, u, p), int(t), p))


@dataclass(frozen=True)
class BoundReport:
    cd: int
    eh: int | None
    thm2: int
    pan_sun: int
    clamped: bool

    def to_dict(self) -> dict:
        return {"cd": self.cd, "eh": self.eh, "thm2": self.thm2,
                "pan_sun": self.pan_sun, "clamped": self.clamped}


def bound_table(p, nA: int, nB: int, nS: int) -> BoundReport:
    """Closed-form lower bounds on |C| for sets of the given sizes.

    ``cd`` is Cauchy-Davenport, ``eh`` Erdos-Heilbronn (only when nA == nB),
    ``thm2`` is min{p, nA+nB-2nS-1} and ``pan_sun`` is min{p, nA+nB-nS-2}.
    Negative raw values are clamped to 0 and flagged.
    """
    p = as_modulus(p).p
    for name, n in (("nA", nA), ("nB", nB), ("nS", nS)):
        if not 0 <= n <= p:
            raise PreconditionError(f"{name}={n} outside [0, {p}]")
    raws = {
        "cd": nA + nB - 1,
        "eh": 2 * nA - 3 if nA == nB else None,
        "thm2": nA + nB - 2 * nS - 1,
        "pan_sun": nA + nB - nS - 2,
    }
    clamped = any(r is not None and r < 0 for r in raws.values())
    vals = {k: None if r is None else max(0, min(p, r)) for k, r in raws.items()}
    return BoundReport(clamped=clamped, **vals)


def pan_sun_applies(p, nS: int) -> bool:
    """Whether the stronger bound is a theorem: odd p and S nonempty and proper."""
    p = as_modulus(p).p
    return p != 2 and 0 < nS < p
