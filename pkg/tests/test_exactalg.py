from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jackd.errors import ConsistencyError, DomainError
from jackd.exactalg import (
    ALPHA,
    ONE,
    ZERO,
    AlphaPoly,
    XPoly,
    det_exact,
    falling_factorial_collect,
    falling_factorial_expand,
    format_rational,
    forward_difference,
    newton_interpolate,
    parse_rational,
)
from jackd.hooks import bold_H
from jackd.partitions import Partition

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
polys = st.lists(rationals, max_size=5).map(AlphaPoly)
xpolys = st.lists(polys, max_size=4).map(XPoly)


def test_parse_and_format():
    assert parse_rational("3/6") == F(1, 2)
    assert parse_rational("-4") == -4
    assert format_rational(F(6, 3)) == "2"
    assert format_rational(F(-1, 2)) == "-1/2"
    with pytest.raises(DomainError):
        parse_rational("1/0")
    with pytest.raises(DomainError):
        parse_rational("x")


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    assert p * ONE == p


@given(polys, rationals, rationals)
def test_evaluation_is_a_homomorphism(p, a, b):
    q = AlphaPoly((b, 1))
    assert (p * q)(a) == p(a) * q(a)
    assert (p + q)(a) == p(a) + q(a)


def test_render():
    assert (-ALPHA).render() == "-1*a^1"
    assert AlphaPoly((F(1, 2), 0, -3)).render() == "1/2 - 3*a^2"
    assert ZERO.render() == "0"
    assert AlphaPoly((0, 2, 2)).render() == "2*a^1 + 2*a^2"


@given(polys)
def test_json_round_trip(p):
    assert AlphaPoly.from_json(p.to_json()) == p


def test_div_alpha_power():
    assert AlphaPoly((0, 0, 3, 1)).div_alpha_power(2) == AlphaPoly((3, 1))
    with pytest.raises(ConsistencyError):
        AlphaPoly((1, 1)).div_alpha_power(1)


def test_forward_difference_examples():
    x2 = XPoly((ZERO, ZERO, ONE))
    assert forward_difference(x2, 2) == AlphaPoly((2,))
    assert forward_difference(x2, 3) == ZERO
    p = bold_H(Partition((2, 1)))
    # first difference of (a + 2 - a x)(1 - a x) at 0
    assert forward_difference(p, 1) == p(1) - p(0)


def test_newton_examples():
    assert newton_interpolate([(0, 1), (1, 1)]) == ONE
    assert newton_interpolate([(0, 0), (1, 1), (2, 4)]) == AlphaPoly((0, 0, 1))
    assert newton_interpolate([(0, 0), (1, 4), (2, 12)]) == AlphaPoly((0, 2, 2))
    with pytest.raises(DomainError):
        newton_interpolate([(1, 0), (1, 2)])


@given(polys, st.sets(st.integers(-20, 20), min_size=6, max_size=6))
def test_newton_recovers_polynomial(p, xs):
    assert newton_interpolate([(x, p(x)) for x in sorted(xs)]) == p


def test_det_examples():
    assert det_exact([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert det_exact([[1, 1], [1, 2]]) == 1
    xs = (9, 4, 0, -3)
    V = [[x**j for j in range(4)] for x in xs]
    assert abs(det_exact(V)) == 45360
    assert det_exact([[0, 1], [1, 0]]) == -1
    assert det_exact([]) == 1


@given(st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_matches_cofactor_expansion(m):
    def minor(a, i):
        return [row[:i] + row[i + 1 :] for row in a[1:]]

    def cofactor(a):
        if len(a) == 1:
            return a[0][0]
        return sum((-1) ** i * a[0][i] * cofactor(minor(a, i)) for i in range(len(a)))

    assert det_exact(m) == cofactor(m)


def test_falling_factorial_examples():
    # lam_1 = 1: bold H = -a x + lam'_1
    p = XPoly((AlphaPoly((3,)), -ALPHA))
    assert falling_factorial_expand(p) == [AlphaPoly((3,)), AlphaPoly((-1,))]
    assert falling_factorial_expand(XPoly((AlphaPoly((5,)),))) == [AlphaPoly((5,))]
    assert falling_factorial_expand(bold_H(Partition((2, 2))))[0] == AlphaPoly((4, 2))


@given(st.lists(polys, min_size=1, max_size=4))
def test_falling_factorial_round_trip(cs):
    # only x-polynomials whose x^k coefficient is divisible by a^k have an expansion
    p = falling_factorial_collect(cs)
    expanded = falling_factorial_expand(p)
    width = max(len(cs), len(expanded))
    pad = lambda c: list(c) + [ZERO] * (width - len(c))
    assert pad(expanded) == pad(cs)
    assert falling_factorial_collect(expanded) == p


@given(xpolys, rationals)
def test_divide_linear(p, r):
    q, rem = p.divide_linear(r)
    assert q * XPoly((AlphaPoly((-r,)), ONE)) + XPoly((rem,)) == p
