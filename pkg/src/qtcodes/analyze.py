"""Exact analysis of small linear codes by exhaustive enumeration.

Every routine here works from a row-reduced generator, so a generator with
redundant rows (such as the 2m-row block form of a 2-generator QT code)
is enumerated over its q^k distinct messages only.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import BadGeometry, ParameterError, TooLarge, ZeroDimensional
from .gf import Field
from .twistulant import Matrix

ENUMERATION_CAP = 10**7
_CHUNK = 1 << 15


def row_reduce(field: Field, rows: np.ndarray, row_order=None):
    """Reduced row echelon form over GF(q).

    Pivots are taken column by column from the first nonzero entry among the
    remaining rows, lowest row index first (after applying ``row_order``).
    Returns ``(rref_rows, pivot_columns)`` with zero rows dropped.
    """
    a = np.array(rows, dtype=np.int64)
    if row_order is not None:
        a = a[list(row_order)]
    n_rows, n_cols = a.shape if a.ndim == 2 else (0, 0)
    add, mul, neg = field.add_table, field.mul_table, field.neg_table
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = mul[field.inv(int(a[r, c])), a[r]]
        others = np.nonzero(a[:, c])[0]
        for i in others:
            if i != r:
                a[i] = add[a[i], mul[neg[a[i, c]], a[r]]]
        pivots.append(c)
        r += 1
    return a[:r], pivots


@dataclass
class LinearCode:
    """A linear code given by a (possibly rank-deficient) generator matrix."""

    generator: Matrix
    row_order: tuple | None = None
    reduced_generator: Matrix = dc_field(init=False)
    pivots: list = dc_field(init=False)

    def __post_init__(self):
        reduced, pivots = row_reduce(self.generator.field, self.generator.data, self.row_order)
        self.reduced_generator = Matrix(self.generator.field, reduced.reshape(-1, self.generator.n_cols))
        self.pivots = pivots

    @property
    def field(self) -> Field:
        return self.generator.field

    @property
    def n(self) -> int:
        return self.generator.n_cols

    @property
    def k(self) -> int:
        return len(self.pivots)

    @property
    def size(self) -> int:
        return self.field.q**self.k

    def encode(self, messages: np.ndarray) -> np.ndarray:
        """Encode a batch of messages (shape ``(N, k)``) with the reduced generator."""
        f = self.field
        g = self.reduced_generator.data
        out = np.zeros((messages.shape[0], self.n), dtype=np.int64)
        for i in range(self.k):
            out = f.add_table[out, f.mul_table[messages[:, i][:, None], g[i][None, :]]]
        return out

    def codeword_chunks(self, cap: int = ENUMERATION_CAP, chunk: int = _CHUNK):
        """Yield all q^k codewords in blocks, message space in lexicographic order."""
        if self.size > cap:
            raise TooLarge(self.size, cap)
        q, k = self.field.q, self.k
        digits = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
        for start in range(0, self.size, chunk):
            idx = np.arange(start, min(start + chunk, self.size), dtype=np.int64)
            messages = (idx[:, None] // digits[None, :]) % q if k else np.zeros((idx.size, 0), np.int64)
            yield self.encode(messages)

    def codewords(self, cap: int = ENUMERATION_CAP) -> np.ndarray:
        return np.concatenate(list(self.codeword_chunks(cap)), axis=0)

    def contains(self, words: np.ndarray) -> np.ndarray:
        """Membership test for a batch of words (shape ``(N, n)``).

        The reduced generator has an identity at its pivot columns, so a word
        lies in the code iff it equals the encoding of its own pivot entries.
        """
        words = np.atleast_2d(np.asarray(words, dtype=np.int64))
        if words.shape[1] != self.n:
            raise ParameterError(f"word length {words.shape[1]} != n = {self.n}")
        return np.all(self.encode(words[:, self.pivots]) == words, axis=1)


@dataclass(frozen=True)
class WeightDistribution:
    counts: dict
    n: int
    q: int
    k: int

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def nonzero_weights(self) -> list[int]:
        return sorted(w for w in self.counts if w > 0)

    def __getitem__(self, w: int) -> int:
        return self.counts.get(w, 0)

    def power_moments_hold(self) -> bool:
        """First two power moments of a projective code.

        sum_{w>0} A_w = q^k - 1 and sum_{w>0} w A_w = n (q-1) q^(k-1).
        The second identity needs every coordinate to be nonzero on some codeword.
        """
        q, k, n = self.q, self.k, self.n
        a0 = sum(c for w, c in self.counts.items() if w > 0)
        a1 = sum(w * c for w, c in self.counts.items())
        return a0 == q**k - 1 and a1 == n * (q - 1) * q ** (k - 1)


def weight_distribution(c: LinearCode, cap: int = ENUMERATION_CAP) -> WeightDistribution:
    hist = np.zeros(c.n + 1, dtype=np.int64)
    for words in c.codeword_chunks(cap):
        hist += np.bincount(np.count_nonzero(words, axis=1), minlength=c.n + 1)
    counts = {int(w): int(a) for w, a in enumerate(hist) if a}
    return WeightDistribution(counts, c.n, c.field.q, c.k)


def min_distance(c: LinearCode, cap: int = ENUMERATION_CAP) -> int:
    if c.k == 0:
        raise ZeroDimensional("a zero-dimensional code has no minimum distance")
    return weight_distribution(c, cap).nonzero_weights[0]


def is_two_weight(c: LinearCode, cap: int = ENUMERATION_CAP):
    ws = weight_distribution(c, cap).nonzero_weights
    return (ws[0], ws[1]) if len(ws) == 2 else None


def is_equidistant(c: LinearCode, cap: int = ENUMERATION_CAP):
    ws = weight_distribution(c, cap).nonzero_weights
    return ws[0] if len(ws) == 1 else None


def normalized_columns(c: LinearCode) -> np.ndarray:
    """Columns of the reduced generator scaled so the first nonzero entry is 1 (zero columns stay zero)."""
    f = c.field
    cols = c.reduced_generator.data.T.copy()
    for j in range(cols.shape[0]):
        nz = np.nonzero(cols[j])[0]
        if nz.size:
            cols[j] = f.mul_table[f.inv(int(cols[j, nz[0]])), cols[j]]
    return cols


def is_projective(c: LinearCode) -> bool:
    """No zero column and no two proportional columns (dual distance >= 3)."""
    if c.k == 0:
        raise ZeroDimensional("projectivity is undefined for a zero-dimensional code")
    cols = normalized_columns(c)
    if not np.all(cols.any(axis=1)):
        return False
    return len({row.tobytes() for row in cols}) == cols.shape[0]


def shift_words(words: np.ndarray, positions: int, lam: int, field: Field) -> np.ndarray:
    """Lambda-consta-cyclic shift of every row by ``positions`` places.

    Entries that wrap past the end are multiplied by lambda once per wrap.
    """
    n = words.shape[1]
    out = words
    for _ in range(positions):
        out = np.concatenate([field.mul_table[lam, out[:, -1:]], out[:, :-1]], axis=1)
    return out


def qt_closure(
    c: LinearCode,
    P: int,
    lam: int,
    interleaved: bool = True,
    block_len: int | None = None,
    cap: int = ENUMERATION_CAP,
) -> bool:
    """Check that the code is closed under its quasi-twisted shift.

    Interleaved form: the whole word is lambda-shifted ``P`` positions.
    Block form: the word is cut into blocks of ``block_len`` columns and every
    block is lambda-shifted by one position simultaneously.
    """
    n, f = c.n, c.field
    if interleaved:
        if P < 1 or n % P:
            raise BadGeometry(f"n = {n} is not a multiple of P = {P}")
    else:
        if not block_len or n % block_len:
            raise BadGeometry(f"n = {n} is not a multiple of block length {block_len}")
    for words in c.codeword_chunks(cap):
        if interleaved:
            shifted = shift_words(words, P, lam, f)
        else:
            blocks = words.reshape(words.shape[0], n // block_len, block_len)
            wrapped = f.mul_table[lam, blocks[:, :, -1:]]
            shifted = np.concatenate([wrapped, blocks[:, :, :-1]], axis=2).reshape(words.shape)
        if not c.contains(shifted).all():
            return False
    return True


def message_space(q: int, k: int):
    """Lexicographic iterator over GF(q)^k as integer tuples (for small reference checks)."""
    return itertools.product(range(q), repeat=k)
