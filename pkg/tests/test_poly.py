import itertools
import random

import pytest

from qtcodes.errors import DivisionByZeroPoly, NotDivisible, NotMonic
from qtcodes.gf import make_field
from qtcodes.poly import (
    Polynomial,
    QuotientRing,
    ZERO_DEGREE,
    exact_div,
    find_primitive_poly,
    is_primitive,
    mul_mod,
    power_residue,
)

F2, F3 = make_field(2), make_field(3)


def P(f, *coeffs):
    return Polynomial.from_ints(f, coeffs)


def test_normalization_and_degree():
    assert P(F2, 1, 0, 0).coeffs == (1,)
    assert P(F2).degree == ZERO_DEGREE
    assert P(F3, -1, 1).coeffs == (2, 1)


def test_text_round_trip():
    g = P(F2, 1, 1, 1, 0, 1)
    assert g.text() == "1,1,1,0,1"
    assert Polynomial.parse(F2, g.text()) == g


def test_mul_examples():
    assert P(F2, 1, 1) * P(F2, 1, 1) == P(F2, 1, 0, 1)
    assert P(F2, 1, 1) * P(F2, 1, 0, 1, 1) == P(F2, 1, 1, 1, 0, 1)
    assert (P(F3, 1, 2) * P(F3)).is_zero()


def test_exact_div_examples():
    # x^4 + 1 = x^4 - 2 over GF(3), divided by x^2 - x - 1
    assert exact_div(P(F3, 1, 0, 0, 0, 1), P(F3, -1, -1, 1)) == P(F3, -1, 1, 1)
    assert exact_div(P(F2, 1, 0, 0, 0, 0, 0, 0, 1), P(F2, 1, 1, 0, 1)) == P(F2, 1, 1, 1, 0, 1)
    p = P(F3, 2, 0, 1, 1)
    assert exact_div(p, P(F3, 1)) == p


def test_exact_div_errors():
    with pytest.raises(NotDivisible) as info:
        exact_div(P(F2, 1, 0, 1, 1), P(F2, 1, 1))
    assert not info.value.remainder.is_zero()
    with pytest.raises(DivisionByZeroPoly):
        exact_div(P(F2, 1), P(F2))


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_exact_div_inverts_mul(q):
    rng = random.Random(q)
    f = make_field(q)
    for _ in range(100):
        a = Polynomial(f, [rng.randrange(q) for _ in range(rng.randrange(8))])
        b = Polynomial(f, [rng.randrange(q) for _ in range(rng.randrange(1, 6))] + [rng.randrange(1, q)])
        assert exact_div(a * b, b) == a


def test_mul_mod_examples():
    ring = QuotientRing(F3, 4, 2)
    assert mul_mod(P(F3, 0, 1), P(F3, 0, 0, 0, 1), ring) == P(F3, 2)
    assert mul_mod(P(F3, 0, 0, 1), P(F3, -1, 1, 1), ring) == P(F3, 2, 0, 2, 1)
    a = P(F3, 1, 2, 0, 1)
    assert mul_mod(a, ring.one(), ring) == a


@pytest.mark.parametrize("q, m, lam", [(2, 7, 1), (3, 4, 2), (4, 5, 3), (5, 6, 2)])
def test_mul_mod_ring_axioms(q, m, lam):
    rng = random.Random(m)
    f = make_field(q)
    ring = QuotientRing(f, m, lam)

    def rand():
        return Polynomial(f, [rng.randrange(q) for _ in range(m)])

    for _ in range(50):
        a, b, c = rand(), rand(), rand()
        assert mul_mod(a, b, ring) == mul_mod(b, a, ring)
        assert mul_mod(mul_mod(a, b, ring), c, ring) == mul_mod(a, mul_mod(b, c, ring), ring)
        assert mul_mod(a, b, ring).degree < m


def _naive_root_order(h):
    # repeated multiplication by x modulo h, no factorization shortcuts
    one = P(h.field, 1)
    x = P(h.field, 0, 1)
    cur, e = x % h, 1
    while cur != one:
        cur = (cur * x) % h
        e += 1
        if e > h.field.q ** h.degree:
            return None
    return e


def test_is_primitive_examples():
    assert is_primitive(P(F3, -1, -1, 1), 2)
    assert is_primitive(P(F2, 1, 1, 0, 1), 3)
    assert _naive_root_order(P(F3, 1, 0, 1)) == 4
    assert not is_primitive(P(F3, 1, 0, 1), 2)
    with pytest.raises(NotMonic):
        is_primitive(P(F3, 1, 0, 2))


@pytest.mark.parametrize("q, t", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2)])
def test_is_primitive_against_naive_order(q, t):
    f = make_field(q)
    for low in itertools.product(range(q), repeat=t):
        h = Polynomial(f, low + (1,))
        if low[0] == 0:
            assert not is_primitive(h)
            continue
        assert is_primitive(h) == (_naive_root_order(h) == q**t - 1)


def _brute_first_primitive(q, t):
    # monic candidates in order of the integer value sum(c_i q^i)
    f = make_field(q)
    for value in range(q**t):
        low = [(value // q**i) % q for i in range(t)]
        h = Polynomial(f, low + [1])
        if low[0] and _naive_root_order(h) == q**t - 1:
            return h
    return None


@pytest.mark.parametrize(
    "q, t, expected",
    [(2, 3, (1, 1, 0, 1)), (3, 2, (2, 1, 1)), (2, 1, (1, 1))],
)
def test_find_primitive_poly_examples(q, t, expected):
    assert find_primitive_poly(make_field(q), t).coeffs == expected


@pytest.mark.parametrize("q, t", [(2, 2), (2, 4), (3, 3), (4, 2), (5, 2), (7, 2)])
def test_find_primitive_poly_matches_scan(q, t):
    h = find_primitive_poly(make_field(q), t)
    assert h == _brute_first_primitive(q, t)
    assert is_primitive(h, t)


def test_power_residue_examples():
    h = P(F3, -1, -1, 1)
    assert power_residue(h, 0) == P(F3, 1)
    assert power_residue(h, 4) == P(F3, 2)
    assert power_residue(P(F2, 1, 1, 0, 1), 7) == P(F2, 1)


@pytest.mark.parametrize("q, t", [(2, 3), (3, 2), (3, 3), (4, 2)])
def test_primitive_order_divisors(q, t):
    h = find_primitive_poly(make_field(q), t)
    order = q**t - 1
    one = P(h.field, 1)
    assert power_residue(h, order) == one
    assert all(power_residue(h, e) != one for e in range(1, order) if order % e == 0)
