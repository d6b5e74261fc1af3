"""Twistulant (consta-cyclic) matrices and a small dense matrix container over GF(q).

A twistulant matrix is fully determined by its first row, read as a
polynomial c(x) in GF(q)[x]/(x^m - lambda).  Each following row is the
previous one shifted right by one place with the wrapped entry multiplied by
lambda, so row i is the coefficient vector of x^i * c(x) in the ring.  Matrix
products of twistulants then correspond to ring products of their defining
polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FieldMismatch, ParameterError, RingMismatch
from .gf import Field
from .poly import Polynomial, QuotientRing, mul_mod


class Matrix:
    """Dense matrix of canonical field encodings."""

    __slots__ = ("field", "data")

    def __init__(self, field: Field, rows):
        data = np.array(rows, dtype=np.int64)
        if data.ndim == 1 and data.size == 0:
            data = data.reshape(0, 0)
        if data.ndim != 2:
            raise ParameterError("matrix rows must be rectangular")
        if data.size and (data.min() < 0 or data.max() >= field.q):
            raise ParameterError(f"matrix entries must be encodings in [0, {field.q})")
        data.setflags(write=False)
        self.field = field
        self.data = data

    @classmethod
    def zeros(cls, field: Field, n_rows: int, n_cols: int) -> Matrix:
        return cls(field, np.zeros((n_rows, n_cols), dtype=np.int64))

    @property
    def n_rows(self) -> int:
        return self.data.shape[0]

    @property
    def n_cols(self) -> int:
        return self.data.shape[1]

    @property
    def rows(self) -> list[list[int]]:
        return self.data.tolist()

    def __matmul__(self, other: Matrix) -> Matrix:
        if other.field != self.field:
            raise FieldMismatch("matrices over different fields")
        if self.n_cols != other.n_rows:
            raise ParameterError(f"shape mismatch {self.data.shape} @ {other.data.shape}")
        f = self.field
        out = np.zeros((self.n_rows, other.n_cols), dtype=np.int64)
        for l in range(self.n_cols):
            out = f.add_table[out, f.mul_table[self.data[:, l][:, None], other.data[l][None, :]]]
        return Matrix(f, out)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.field == self.field
            and np.array_equal(other.data, self.data)
        )

    def __hash__(self):
        return hash((self.field.q, self.data.shape, self.data.tobytes()))

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.n_rows}x{self.n_cols})"

    def text(self) -> str:
        """One row per line, entries separated by single spaces."""
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)

    @classmethod
    def parse(cls, field: Field, text: str) -> Matrix:
        rows = [line.split() for line in text.strip().splitlines() if line.strip()]
        try:
            return cls(field, [[int(v) for v in row] for row in rows])
        except ValueError as exc:
            raise ParameterError(f"bad matrix text: {exc}") from exc


def block_matrix(field: Field, blocks) -> Matrix:
    """Assemble a matrix from a 2-D list of equally sized square blocks (``None`` means zero)."""
    size = next(b.n_rows for row in blocks for b in row if b is not None)
    zero = np.zeros((size, size), dtype=np.int64)
    return Matrix(field, np.block([[zero if b is None else b.data for b in row] for row in blocks]))


@dataclass(frozen=True)
class TwistulantSpec:
    defining_poly: Polynomial
    ring: QuotientRing

    def __post_init__(self):
        if self.defining_poly.field != self.ring.field:
            raise FieldMismatch("defining polynomial and ring must share a field")
        if self.defining_poly.degree >= self.ring.m:
            raise ParameterError(
                f"defining polynomial degree {self.defining_poly.degree} must be < m = {self.ring.m}"
            )

    @property
    def is_circulant(self) -> bool:
        return self.ring.lam == 1


def twist_shift(v, positions: int, lam: int, field: Field) -> list[int]:
    """Apply the lambda-consta-cyclic shift (a_0..a_{n-1}) -> (lam*a_{n-1}, a_0, ..., a_{n-2})."""
    if positions < 0:
        raise ParameterError("shift count must be nonnegative")
    v = [int(a) for a in v]
    for _ in range(positions):
        v = [field.mul(lam, v[-1])] + v[:-1]
    return v


def materialize(spec: TwistulantSpec) -> Matrix:
    f, m, lam = spec.ring.field, spec.ring.m, spec.ring.lam
    row = spec.defining_poly.padded(m)
    rows = [row]
    for _ in range(m - 1):
        row = twist_shift(row, 1, lam, f)
        rows.append(row)
    return Matrix(f, rows)


def spec_product(a: TwistulantSpec, b: TwistulantSpec) -> TwistulantSpec:
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    return TwistulantSpec(mul_mod(a.defining_poly, b.defining_poly, a.ring), a.ring)
