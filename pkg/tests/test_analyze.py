import itertools
from collections import Counter

import numpy as np
import pytest

from qtcodes.analyze import (
    LinearCode,
    is_equidistant,
    is_projective,
    is_two_weight,
    min_distance,
    qt_closure,
    weight_distribution,
)
from qtcodes.errors import BadGeometry, TooLarge, ZeroDimensional
from qtcodes.gf import make_field
from qtcodes.poly import Polynomial
from qtcodes.qtconstruct import build_simplex_2t, build_two_weight, interleave
from qtcodes.simplex import build_simplex, simplex_from_explicit_g
from qtcodes.twistulant import Matrix

F2 = make_field(2)


def code_of(f, rows):
    return LinearCode(Matrix(f, rows))


def brute_distribution(f, rows):
    """Span every message over all generator rows (redundant ones included)."""
    words = set()
    for msg in itertools.product(range(f.q), repeat=len(rows)):
        word = [0] * len(rows[0])
        for c, row in zip(msg, rows):
            word = [f.add(w, f.mul(c, r)) for w, r in zip(word, row)]
        words.add(tuple(word))
    return dict(Counter(sum(1 for x in w if x) for w in words))


def binary_series(p=8):
    return build_two_weight(F2, 3, p, Polynomial(F2, (1, 1, 0, 1)))


def simplex7():
    return build_simplex(F2, 3, Polynomial(F2, (1, 1, 0, 1))).linear_code()


def test_weight_distribution_examples():
    assert weight_distribution(simplex7()).counts == {0: 1, 4: 7}
    wd = weight_distribution(binary_series().linear_code())
    assert wd.counts == {0: 1, 28: 56, 32: 7}
    assert wd.total == 64
    assert weight_distribution(code_of(F2, [[0, 0, 0]])).counts == {0: 1}


@pytest.mark.parametrize("p", [2, 3])
def test_against_brute_force_span(p):
    # 2m = 14 generator rows, 2^14 messages
    rows = binary_series(p).generator.rows
    assert weight_distribution(binary_series(p).linear_code()).counts == brute_distribution(F2, rows)


def test_brute_force_ternary():
    code = build_two_weight(make_field(3), 2, 3)
    rows = code.generator.rows
    assert weight_distribution(code.linear_code()).counts == brute_distribution(make_field(3), rows)


def test_brute_force_gf4():
    f = make_field(4)
    code = build_simplex(f, 2)
    rows = code.linear_code().reduced_generator.rows
    assert weight_distribution(code.linear_code()).counts == brute_distribution(f, rows)


def test_power_moments_binary_series():
    wd = weight_distribution(binary_series().linear_code())
    assert wd[28] + wd[32] == 63
    assert 28 * wd[28] + 32 * wd[32] == 56 * 32
    assert wd.power_moments_hold()


def test_min_distance_examples():
    f3 = make_field(3)
    g = Polynomial.from_ints(f3, (1, 0, 1, 1, 1, -1, -1, 0, 1, -1, 1))
    assert min_distance(simplex_from_explicit_g(f3, 13, 1, g).linear_code()) == 9
    assert min_distance(build_two_weight(f3, 2, 9).linear_code()) == 24
    assert min_distance(build_two_weight(F2, 4, 13).linear_code()) == 96
    with pytest.raises(ZeroDimensional):
        min_distance(code_of(F2, [[0, 0]]))


def test_two_weight_and_equidistant():
    assert is_two_weight(binary_series().linear_code()) == (28, 32)
    assert is_two_weight(simplex7()) is None
    assert is_two_weight(binary_series(2).linear_code()) == (4, 8)
    assert is_equidistant(simplex7()) == 4
    assert is_equidistant(build_simplex_2t(F2, 2).linear_code()) == 8
    assert is_equidistant(binary_series(2).linear_code()) is None


def test_projective():
    assert is_projective(binary_series().linear_code())
    assert not is_projective(code_of(F2, [[1, 1]]))
    assert is_projective(simplex7())
    assert not is_projective(code_of(F2, [[1, 0, 0], [0, 1, 0]]))  # zero column
    f3 = make_field(3)
    assert not is_projective(code_of(f3, [[1, 2], [1, 2]]))


def test_qt_closure_examples():
    code = binary_series()
    assert qt_closure(LinearCode(interleave(code)), 8, 1)
    assert qt_closure(simplex7(), 1, 1)
    assert not qt_closure(code_of(F2, [[1, 0, 0], [0, 1, 0]]), 1, 1)
    with pytest.raises(BadGeometry):
        qt_closure(simplex7(), 2, 1)


def test_block_and_interleaved_forms_agree():
    code = build_two_weight(make_field(3), 2, 5)
    block = code.linear_code()
    inter = LinearCode(interleave(code))
    assert qt_closure(block, 1, code.lam, interleaved=False, block_len=code.m)
    assert qt_closure(inter, 5, code.lam)
    assert weight_distribution(block).counts == weight_distribution(inter).counts


def test_reduced_generator_spans_original():
    code = build_two_weight(make_field(4), 2, 6)
    lc = code.linear_code()
    assert lc.k == 4
    assert lc.contains(code.generator.data).all()


@pytest.mark.parametrize("q, t, p", [(2, 3, 5), (3, 2, 7), (4, 2, 4)])
def test_pivot_order_invariance(q, t, p):
    code = build_two_weight(make_field(q), t, p)
    rows = code.generator.n_rows
    a = LinearCode(code.generator)
    b = LinearCode(code.generator, row_order=tuple(reversed(range(rows))))
    assert weight_distribution(a).counts == weight_distribution(b).counts
    assert b.contains(a.reduced_generator.data).all()


def test_enumeration_cap():
    lc = build_two_weight(make_field(3), 3, 5).linear_code()
    with pytest.raises(TooLarge) as info:
        weight_distribution(lc, cap=100)
    assert info.value.size == 729


def test_contains_rejects_non_codewords():
    lc = simplex7()
    words = np.array([[1, 0, 0, 0, 0, 0, 0]])
    assert not lc.contains(words).any()
