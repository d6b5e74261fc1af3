"""Consta-cyclic simplex codes [(q^t-1)/(q-1), t, q^(t-1)]_q.

Given a primitive polynomial h(x) of degree t with root alpha, the shift
constant is forced to be lambda = alpha^m (m = (q^t-1)/(q-1)), which always
lies in the base field and has order q - 1.  The generator polynomial is
g(x) = (x^m - lambda) / h(x).
"""
from __future__ import annotations

from dataclasses import dataclass

from .analyze import LinearCode, weight_distribution
from .errors import BadDegree, NotDivisible, NotDivisor, NotPrimitive, NotSimplex, ParameterError
from .gf import Field
from .poly import Polynomial, QuotientRing, exact_div, find_primitive_poly, is_primitive, power_residue
from .twistulant import Matrix, TwistulantSpec, materialize


@dataclass(frozen=True)
class SimplexCode:
    field: Field
    t: int
    m: int
    lam: int
    h: Polynomial
    g: Polynomial

    @property
    def ring(self) -> QuotientRing:
        return QuotientRing(self.field, self.m, self.lam)

    @property
    def spec(self) -> TwistulantSpec:
        return TwistulantSpec(self.g, self.ring)

    @property
    def weight(self) -> int:
        return self.field.q ** (self.t - 1)

    def generator(self) -> Matrix:
        """The m x m twistulant matrix of g(x); its row space is the simplex code (rank t)."""
        return materialize(self.spec)

    def linear_code(self) -> LinearCode:
        return LinearCode(self.generator())


def simplex_length(q: int, t: int) -> int:
    return (q**t - 1) // (q - 1)


def build_simplex(f: Field, t: int, h: Polynomial | None = None) -> SimplexCode:
    """Simplex code from a primitive ``h`` of degree ``t``; ``None`` picks the canonical one."""
    if t < 2:
        raise BadDegree(f"simplex dimension t must be > 1, got {t}")
    if h is None:
        h = find_primitive_poly(f, t)
    elif h.field != f:
        raise ParameterError("h must be defined over the requested field")
    if not h.is_monic() or h.degree != t or not is_primitive(h):
        raise NotPrimitive(f"{h.text()} is not a primitive polynomial of degree {t} over {f!r}")
    m = simplex_length(f.q, t)
    lam_poly = power_residue(h, m)
    # alpha^m has order q - 1, so it is a nonzero base-field constant
    assert lam_poly.degree == 0, lam_poly
    lam = lam_poly.coeffs[0]
    ring = QuotientRing(f, m, lam)
    g = exact_div(ring.modulus, h)
    return SimplexCode(f, t, m, lam, h, g)


def simplex_from_explicit_g(f: Field, m: int, lam: int, g: Polynomial) -> SimplexCode:
    """Wrap an explicitly given generator polynomial, checking that it spans a simplex code."""
    ring = QuotientRing(f, m, lam)
    if g.is_zero() or g.field != f:
        raise NotDivisor("g must be a nonzero polynomial over the field")
    try:
        h = exact_div(ring.modulus, g)
    except NotDivisible as exc:
        raise NotDivisor(f"{g.text()} does not divide x^{m} - {lam}") from exc
    t = m - int(g.degree)
    if t < 2:
        raise NotSimplex(f"dimension {t} is too small for a simplex code")
    if simplex_length(f.q, t) != m:
        raise NotSimplex(f"length {m} is not (q^t - 1)/(q - 1) for t = {t}")
    code = SimplexCode(f, t, m, lam, h, g)
    lc = code.linear_code()
    wd = weight_distribution(lc)
    if lc.k != t or wd.nonzero_weights != [code.weight]:
        raise NotSimplex(f"nonzero weights {wd.nonzero_weights} are not all {code.weight}")
    return code


def codeword_polys(s: SimplexCode) -> list[Polynomial]:
    """All a * x^j * g(x) mod (x^m - lambda), ordered by a ascending, then j ascending."""
    ring = s.ring
    out = []
    for a in s.field.nonzero():
        base = s.g * a
        for j in range(s.m):
            out.append(ring.reduce(Polynomial.monomial(s.field, j) * base))
    return out
