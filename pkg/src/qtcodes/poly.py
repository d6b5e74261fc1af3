"""Univariate polynomials over GF(q) and the quotient rings GF(q)[x]/(x^m - lambda).

Coefficients are canonical field encodings stored in ascending degree order,
so ``Polynomial(F, (1, 1, 1, 0, 1))`` is ``1 + x + x^2 + x^4``.  Text form
is the same vector joined by commas.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import (
    BadDegree,
    DivisionByZeroPoly,
    FieldMismatch,
    NotDivisible,
    NotMonic,
    ParameterError,
    RingMismatch,
)
from .gf import Field, FieldElement, prime_factors

ZERO_DEGREE = -math.inf


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Polynomial:
    field: Field
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        for c in coeffs:
            if not 0 <= c < self.field.q:
                raise ParameterError(f"coefficient {c} is not an element of {self.field!r}")
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def from_ints(cls, field: Field, values) -> Polynomial:
        """Build from integers in (-q, q); negative values denote additive inverses."""
        return cls(field, tuple(field.normalize(int(v)) for v in values))

    @classmethod
    def parse(cls, field: Field, text: str) -> Polynomial:
        text = text.strip()
        if not text:
            return cls(field, ())
        try:
            values = [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise ParameterError(f"bad polynomial text {text!r}") from exc
        return cls.from_ints(field, values)

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff: int = 1) -> Polynomial:
        return cls(field, (0,) * degree + (coeff,))

    @classmethod
    def constant(cls, field: Field, c: int) -> Polynomial:
        return cls(field, (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, length: int) -> list[int]:
        if len(self.coeffs) > length:
            raise ParameterError(f"degree {self.degree} does not fit in length {length}")
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    def text(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def _same(self, other: Polynomial):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._same(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(f, tuple(f.add(self.coeff(i), other.coeff(i)) for i in range(n)))

    def __neg__(self) -> Polynomial:
        return Polynomial(self.field, tuple(self.field.neg(c) for c in self.coeffs))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        f = self.field
        if isinstance(other, (int, FieldElement)):
            c = other.enc if isinstance(other, FieldElement) else f.normalize(other)
            return Polynomial(f, tuple(f.mul(c, a) for a in self.coeffs))
        self._same(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(f, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Polynomial(f, tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, den: Polynomial):
        self._same(den)
        if den.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        f = self.field
        rem = list(self.coeffs)
        dd = len(den.coeffs) - 1
        inv_lead = f.inv(den.lead)
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                factor = f.mul(c, inv_lead)
                quot[i - dd] = factor
                for j, b in enumerate(den.coeffs):
                    rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(factor, b))
        return Polynomial(f, tuple(quot)), Polynomial(f, tuple(rem[:dd]))

    def __mod__(self, den: Polynomial) -> Polynomial:
        return divmod(self, den)[1]

    def __repr__(self):
        return f"Polynomial({self.field!r}, [{self.text()}])"


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def exact_div(num: Polynomial, den: Polynomial) -> Polynomial:
    quot, rem = divmod(num, den)
    if not rem.is_zero():
        raise NotDivisible(rem, f"{den!r} does not divide {num!r}; remainder {rem.text()}")
    return quot


@dataclass(frozen=True)
class QuotientRing:
    """GF(q)[x] / (x^m - lambda)."""

    field: Field
    m: int
    lam: int

    def __post_init__(self):
        if self.m < 1:
            raise ParameterError("ring length m must be positive")
        if not 0 < self.lam < self.field.q:
            raise ParameterError(f"lambda must be a nonzero element of {self.field!r}")

    @property
    def modulus(self) -> Polynomial:
        """The polynomial x^m - lambda."""
        return Polynomial.monomial(self.field, self.m) - Polynomial.constant(self.field, self.lam)

    def reduce(self, a: Polynomial) -> Polynomial:
        if a.field != self.field:
            raise FieldMismatch(f"{a.field!r} vs {self.field!r}")
        f, m = self.field, self.m
        out = [0] * m
        for i, c in enumerate(a.coeffs):
            if c:
                # x^i = lambda^(i // m) * x^(i mod m)
                out[i % m] = f.add(out[i % m], f.mul(c, f.pow(self.lam, i // m)))
        return Polynomial(f, tuple(out))

    def one(self) -> Polynomial:
        return Polynomial.constant(self.field, 1)


def mul_mod(a: Polynomial, b: Polynomial, ring: QuotientRing) -> Polynomial:
    """Product of ``a`` and ``b`` with x^m rewritten as lambda."""
    if a.field != ring.field or b.field != ring.field:
        raise FieldMismatch("operands and ring must share a field")
    return ring.reduce(a * b)


def power_residue(h: Polynomial, e: int) -> Polynomial:
    """x^e mod h by square-and-multiply."""
    if not h.is_monic():
        raise NotMonic(f"{h!r} is not monic")
    if e < 0:
        raise ParameterError("exponent must be nonnegative")
    f = h.field
    result = Polynomial.constant(f, 1) % h
    base = Polynomial.monomial(f, 1) % h
    while e:
        if e & 1:
            result = (result * base) % h
        base = (base * base) % h
        e >>= 1
    return result


def monic_polys(field: Field, degree: int):
    """All monic polynomials of ``degree``, ordered by the integer value sum(c_i q^i)."""
    for high_first in itertools.product(range(field.q), repeat=degree):
        yield Polynomial(field, tuple(reversed(high_first)) + (1,))


def is_irreducible(h: Polynomial) -> bool:
    if not h.is_monic():
        raise NotMonic(f"{h!r} is not monic")
    deg = h.degree
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for cand in monic_polys(h.field, d):
            if (h % cand).is_zero():
                return False
    return True


def is_primitive(h: Polynomial, t: int | None = None) -> bool:
    """True iff ``h`` is irreducible and x has order q^t - 1 modulo ``h``."""
    if not h.is_monic():
        raise NotMonic(f"{h!r} is not monic")
    if t is not None and h.degree != t:
        raise BadDegree(f"expected degree {t}, polynomial has degree {h.degree}")
    t = h.degree
    if t < 1 or not is_irreducible(h):
        return False
    order = h.field.q**t - 1
    one = Polynomial.constant(h.field, 1)
    if power_residue(h, order) != one:
        return False
    return all(power_residue(h, order // ell) != one for ell in prime_factors(order))


def find_primitive_poly(field: Field, t: int) -> Polynomial:
    """First monic primitive polynomial of degree ``t`` in :func:`monic_polys` order."""
    if t < 1:
        raise BadDegree("degree must be >= 1")
    for cand in monic_polys(field, t):
        if cand.coeffs[0] and is_primitive(cand):
            return cand
    raise AssertionError("primitive polynomials exist in every degree")


def same_ring(a: QuotientRing, b: QuotientRing):
    if a != b:
        raise RingMismatch(f"{a} vs {b}")
