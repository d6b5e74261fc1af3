"""2-generator quasi-twisted codes built from a consta-cyclic simplex code.

Two-weight codes (block form, p blocks of m columns)::

    [ G  G   G  ... G       ]
    [ 0  B1  B2 ... B_{p-1} ]

where G is the twistulant of the simplex generator g(x) and the B_j are
distinct twistulants of nonzero simplex codewords a*x^j*g(x).  The code is
[p*m, 2t] with nonzero weights (p-1)*q^(t-1) and p*q^(t-1) for 2 <= p <= q^t.

Appending one more block column (0 on top, G below) to the p = q^t code gives
the [(q^(2t)-1)/(q-1), 2t, q^(2t-1)] simplex code.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .analyze import LinearCode, weight_distribution
from .errors import BadP, DuplicateSelection, NotCodeword, ParameterError, VerificationError
from .gf import Field, make_field
from .poly import Polynomial
from .simplex import SimplexCode, build_simplex, codeword_polys
from .twistulant import Matrix, TwistulantSpec, block_matrix, materialize

# build_* skips the weight enumeration for codes with more codewords than this
VERIFY_CAP = 10**6


@dataclass(frozen=True)
class _BlockCode:
    base: SimplexCode
    generator: Matrix

    @property
    def field(self) -> Field:
        return self.base.field

    @property
    def q(self) -> int:
        return self.base.field.q

    @property
    def t(self) -> int:
        return self.base.t

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def lam(self) -> int:
        return self.base.lam

    @property
    def k(self) -> int:
        return 2 * self.base.t

    @property
    def n(self) -> int:
        return self.generator.n_cols

    @property
    def blocks(self) -> int:
        return self.n // self.m

    def linear_code(self) -> LinearCode:
        return LinearCode(self.generator)

    def interleaved_generator(self) -> Matrix:
        return interleave(self)


@dataclass(frozen=True)
class QTTwoWeightCode(_BlockCode):
    p: int
    selection: tuple

    @property
    def w1(self) -> int:
        return (self.p - 1) * self.q ** (self.t - 1)

    @property
    def w2(self) -> int:
        return self.p * self.q ** (self.t - 1)

    @property
    def d(self) -> int:
        return self.w1

    @property
    def kind(self) -> str:
        return "two_weight"


@dataclass(frozen=True)
class QTSimplexCode(_BlockCode):
    @property
    def p(self) -> int:
        return self.q**self.t + 1

    @property
    def d(self) -> int:
        return self.q ** (2 * self.t - 1)

    @property
    def w1(self) -> int:
        return self.d

    w2 = w1

    @property
    def selection(self) -> tuple:
        return tuple(TwistulantSpec(c, self.base.ring) for c in codeword_polys(self.base))

    @property
    def kind(self) -> str:
        return "simplex_2t"


def select_B(base: SimplexCode, p: int) -> list[TwistulantSpec]:
    """Canonical choice: the first p - 1 simplex codeword polynomials in (a, j) order."""
    q, t = base.field.q, base.t
    if not 2 <= p <= q**t:
        raise BadP(f"p must lie in [2, {q**t}], got {p}")
    return [TwistulantSpec(c, base.ring) for c in codeword_polys(base)[: p - 1]]


def _resolve_base(f: Field, t: int, h, base: SimplexCode | None) -> SimplexCode:
    if base is not None:
        if base.field != f or base.t != t:
            raise ParameterError("explicit base code does not match (q, t)")
        return base
    return build_simplex(f, t, h)


def _check_selection(base: SimplexCode, selection, p: int) -> list[TwistulantSpec]:
    if len(selection) != p - 1:
        raise BadP(f"p = {p} needs {p - 1} B matrices, got {len(selection)}")
    members = set(codeword_polys(base))
    specs = []
    for item in selection:
        poly = item.defining_poly if isinstance(item, TwistulantSpec) else item
        if poly not in members:
            raise NotCodeword(f"{poly.text()} is not a nonzero codeword of the simplex code")
        specs.append(TwistulantSpec(poly, base.ring))
    if len({s.defining_poly for s in specs}) != len(specs):
        raise DuplicateSelection("B matrices must be pairwise distinct")
    return specs


def verify_code(code: _BlockCode, cap: int = VERIFY_CAP) -> None:
    """Enumerate the code and confirm rank 2t and its claimed nonzero weights."""
    lc = code.linear_code()
    if lc.k != code.k:
        raise VerificationError(f"rank {lc.k} != 2t = {code.k}")
    if lc.size > cap:
        return
    ws = weight_distribution(lc).nonzero_weights
    expected = sorted({code.w1, code.w2})
    if ws != expected:
        raise VerificationError(f"nonzero weights {ws} != {expected}")


def build_two_weight(
    f: Field,
    t: int,
    p: int,
    h: Polynomial | None = None,
    selection=None,
    base: SimplexCode | None = None,
    verify: bool = True,
) -> QTTwoWeightCode:
    base = _resolve_base(f, t, h, base)
    if not 2 <= p <= f.q**t:
        raise BadP(f"p must lie in [2, {f.q**t}], got {p}")
    specs = select_B(base, p) if selection is None else _check_selection(base, selection, p)
    G = base.generator()
    top = [G] * p
    bottom = [None] + [materialize(s) for s in specs]
    code = QTTwoWeightCode(base, block_matrix(f, [top, bottom]), p, tuple(specs))
    if verify:
        verify_code(code)
    return code


def build_simplex_2t(
    f: Field,
    t: int,
    h: Polynomial | None = None,
    base: SimplexCode | None = None,
    verify: bool = True,
) -> QTSimplexCode:
    base = _resolve_base(f, t, h, base)
    G = base.generator()
    Bs = [materialize(s) for s in select_B(base, f.q**t)]
    top = [G] * f.q**t + [None]
    bottom = [None] + Bs + [G]
    code = QTSimplexCode(base, block_matrix(f, [top, bottom]))
    if verify:
        verify_code(code)
    return code


def build_code(f: Field, t: int, p: int, h=None, selection=None, base=None, verify=True):
    """Two-weight code for 2 <= p <= q^t, the 2t-dimensional simplex code for p = q^t + 1."""
    if p == f.q**t + 1 and selection is None:
        return build_simplex_2t(f, t, h, base=base, verify=verify)
    return build_two_weight(f, t, p, h, selection, base=base, verify=verify)


def subcode_generators(c: _BlockCode) -> tuple[Matrix, Matrix]:
    """The top and bottom block rows, generating the subcodes C1 and C2."""
    m = c.m
    data = c.generator.data
    return Matrix(c.field, data[:m]), Matrix(c.field, data[m:])


def interleave_permutation(m: int, P: int) -> list[int]:
    """``perm[b*m + s] = s*P + b``: block-form column to interleaved column."""
    return [s * P + b for b in range(P) for s in range(m)]


def interleave(c: _BlockCode) -> Matrix:
    perm = interleave_permutation(c.m, c.blocks)
    data = c.generator.data
    out = data.copy()
    out[:, perm] = data
    return Matrix(c.field, out)


def to_record(c) -> dict:
    """Structured serialization; field elements are canonical encodings."""
    if isinstance(c, SimplexCode):
        rec = {
            "kind": "simplex",
            "q": c.field.q,
            "t": c.t,
            "p": 1,
            "m": c.m,
            "lambda": c.lam,
            "h_coeffs": list(c.h.coeffs),
            "g_coeffs": list(c.g.coeffs),
            "selection": [],
            "n": c.m,
            "k": c.t,
            "w1": c.weight,
            "w2": c.weight,
            "generator": c.generator().rows,
        }
        return rec
    return {
        "kind": c.kind,
        "q": c.q,
        "t": c.t,
        "p": c.p,
        "m": c.m,
        "lambda": c.lam,
        "h_coeffs": list(c.base.h.coeffs),
        "g_coeffs": list(c.base.g.coeffs),
        "selection": [list(s.defining_poly.coeffs) for s in c.selection],
        "n": c.n,
        "k": c.k,
        "w1": c.w1,
        "w2": c.w2,
        "generator": c.generator.rows,
    }


def dumps(c) -> str:
    return json.dumps(to_record(c), sort_keys=True)


REQUIRED_KEYS = ("kind", "q", "t", "p", "m", "lambda", "g_coeffs", "n", "generator")


def from_record(rec: dict) -> tuple[dict, LinearCode]:
    """Validate a serialized record and return it with the code its generator spans."""
    if not isinstance(rec, dict):
        raise ParameterError("code record must be a JSON object")
    missing = [key for key in REQUIRED_KEYS if key not in rec]
    if missing:
        raise ParameterError(f"code record is missing {', '.join(missing)}")
    f = make_field(int(rec["q"]))
    gen = Matrix(f, rec["generator"])
    if gen.n_cols != rec["n"]:
        raise ParameterError(f"generator has {gen.n_cols} columns, record says n = {rec['n']}")
    if rec["n"] % rec["m"]:
        raise ParameterError("n is not a multiple of the block length m")
    return rec, LinearCode(gen)


def loads(text: str) -> tuple[dict, LinearCode]:
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"cannot parse code record: {exc}") from exc
    return from_record(rec)

