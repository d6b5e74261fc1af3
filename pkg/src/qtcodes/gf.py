"""Finite fields GF(q) for prime powers q <= 256.

Elements are stored as canonical integers: the polynomial-basis coordinates
``(a_0, ..., a_{e-1})`` of an element map to ``sum(a_i * char**i)``.  For
prime fields this is the usual residue.  Extension fields use the
monic irreducible modulus over the prime subfield whose coefficient vector,
read as a base-``char`` integer, is smallest.

All arithmetic goes through precomputed ``q x q`` tables, which also serve the
vectorised numpy code in :mod:`qtcodes.analyze` and :mod:`qtcodes.twistulant`.
"""
from __future__ import annotations

import itertools
from functools import lru_cache, total_ordering

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NotPrimePower,
    ParameterError,
    ZeroElement,
)

MAX_Q = 256


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in ascending order (trial division)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _prime_poly_mod(a, b, p):
    """Remainder of ``a`` modulo monic ``b`` over GF(p); ascending coefficient lists."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return [c % p for c in a[:db]]


def _is_irreducible_prime(poly, p) -> bool:
    """Trial division of a monic polynomial over GF(p) by all monic factors of degree <= deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_prime_poly_mod(poly, list(low) + [1], p)):
                return False
    return True


def smallest_irreducible(p: int, degree: int) -> tuple[int, ...]:
    """Monic irreducible of ``degree`` over GF(p) with the smallest value sum(c_i p^i)."""
    for high_first in itertools.product(range(p), repeat=degree):
        cand = tuple(reversed(high_first)) + (1,)
        if _is_irreducible_prime(cand, p):
            return cand
    raise AssertionError("irreducible polynomials exist in every degree")


class Field:
    """The finite field GF(q).

    Use :func:`make_field` rather than instantiating directly; it caches one
    instance per ``q`` so identity comparison is cheap.
    """

    def __init__(self, q: int):
        if q < 2:
            raise ParameterError(f"field order must be >= 2, got {q}")
        if q > MAX_Q:
            raise ParameterError(f"field order {q} exceeds supported maximum {MAX_Q}")
        primes = prime_factors(q)
        if len(primes) != 1:
            raise NotPrimePower(f"{q} is not a prime power")
        self.q = q
        self.char = primes[0]
        e, r = 0, q
        while r > 1:
            r //= self.char
            e += 1
        self.ext_degree = e
        self.modulus = smallest_irreducible(self.char, e) if e > 1 else None
        self._build_tables()

    def _coords(self, enc: int) -> list[int]:
        p = self.char
        return [(enc // p**i) % p for i in range(self.ext_degree)]

    def _from_coords(self, coords) -> int:
        return sum(int(c) * self.char**i for i, c in enumerate(coords))

    def _build_tables(self):
        q, p = self.q, self.char
        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        coords = [self._coords(a) for a in range(q)]
        for a in range(q):
            for b in range(q):
                add[a, b] = self._from_coords([(x + y) % p for x, y in zip(coords[a], coords[b])])
                if self.ext_degree == 1:
                    mul[a, b] = (a * b) % p
                else:
                    prod = [0] * (2 * self.ext_degree - 1)
                    for i, x in enumerate(coords[a]):
                        for j, y in enumerate(coords[b]):
                            prod[i + j] += x * y
                    mul[a, b] = self._from_coords(_prime_poly_mod(prod, self.modulus, p))
        self.add_table = add
        self.mul_table = mul
        self.neg_table = np.argmin(add, axis=1)  # add[a, neg[a]] == 0 is the unique zero
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        self.inv_table = inv
        self.sub_table = add[:, self.neg_table]
        for tbl in (add, mul, self.neg_table, inv, self.sub_table):
            tbl.setflags(write=False)

    # integer-level arithmetic; polynomial and matrix code works on encodings
    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.sub_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.q})")
        return int(self.inv_table[a])

    def pow(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = int(self.mul_table[r, a])
        return r

    def normalize(self, value: int) -> int:
        """Map a possibly negative integer to an encoding; ``-v`` means the additive inverse of ``v``."""
        if -self.q < value < 0:
            return self.neg(-value)
        if 0 <= value < self.q:
            return value
        raise ParameterError(f"{value} is not an element of GF({self.q})")

    def element(self, enc: int) -> FieldElement:
        return FieldElement(self, self.normalize(enc))

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, a) for a in range(self.q)]

    def nonzero(self) -> list[int]:
        """Nonzero encodings in ascending order (a_1 = 1, a_2 = 2, ...)."""
        return list(range(1, self.q))

    def order(self, a: int) -> int:
        if a == 0:
            raise ZeroElement("the zero element has no multiplicative order")
        e, x = 1, a
        while x != 1:
            x = int(self.mul_table[x, a])
            e += 1
        return e

    def __eq__(self, other):
        return isinstance(other, Field) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def make_field(q: int) -> Field:
    return Field(q)


@total_ordering
class FieldElement:
    """An element of a :class:`Field`, identified by its canonical encoding."""

    __slots__ = ("field", "enc")

    def __init__(self, field: Field, enc: int):
        if not 0 <= enc < field.q:
            raise ParameterError(f"encoding {enc} out of range for {field!r}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "enc", int(enc))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _check(self, other) -> int:
        if isinstance(other, int):
            return self.field.normalize(other)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return other.enc

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.enc, self._check(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.enc, self._check(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._check(other), self.enc))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.enc, self._check(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.enc))

    def __truediv__(self, other):
        return self * inv(FieldElement(self.field, self._check(other)))

    def __pow__(self, e: int):
        if e < 0:
            return inv(self) ** (-e)
        return FieldElement(self.field, self.field.pow(self.enc, e))

    def __bool__(self):
        return self.enc != 0

    def __eq__(self, other):
        if isinstance(other, int):
            return self.enc == other
        return isinstance(other, FieldElement) and other.field == self.field and other.enc == self.enc

    def __lt__(self, other):
        return self.enc < self._check(other)

    def __hash__(self):
        return hash((self.field.q, self.enc))

    def __int__(self):
        return self.enc

    def __index__(self):
        return self.enc

    def __repr__(self):
        return f"{self.field!r}({self.enc})"

    def coords(self) -> list[int]:
        """Polynomial-basis coordinates over the prime subfield."""
        return self.field._coords(self.enc)

    @classmethod
    def from_coords(cls, field: Field, coords) -> FieldElement:
        return cls(field, field._from_coords(coords))


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field.inv(a.enc))


def element_order(a: FieldElement) -> int:
    return a.field.order(a.enc)


def primitive_element(f: Field) -> FieldElement:
    """Smallest-encoded element of multiplicative order ``q - 1``."""
    for a in range(1, f.q):
        if f.order(a) == f.q - 1:
            return FieldElement(f, a)
    raise AssertionError("multiplicative group of a finite field is cyclic")
