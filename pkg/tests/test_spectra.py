from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given, settings

from conftest import partitions
from jackd.colored import hyperoctahedral_derangements, rencontres
from jackd.errors import DomainError
from jackd.exactalg import ALPHA, AlphaPoly
from jackd.jack_oracle import eta_via_characters, syt_count
from jackd.partitions import Partition, partitions_of
from jackd.spectra import (
    d_lambda,
    d_lambda_direct,
    eta,
    eta1_closed,
    eta1_det,
    eta1_det_unsigned,
    eta1_three_row,
    eta1_two_row,
    eta2_closed,
    eta2_doubly_even,
    eta2_two_row,
    eta_alpha0,
    eta_minor_sum,
    eta_rencontres,
    eta_rencontres_at,
    eta_value,
    has_even_columns,
    hook_d_formula,
    immanant_polynomial,
    immanant_polynomial_direct,
    multiplicity,
    spectrum_table,
)

P = Partition
BIG = P((10, 6, 3, 1))
SMALL = [lam for n in range(1, 8) for lam in partitions_of(n)]


def test_eta_examples():
    assert eta(P((2, 1))) == -ALPHA
    assert eta(P((3, 2))) == AlphaPoly((0, 2, 2))
    assert eta(BIG)(1) == 4242315
    assert eta_minor_sum(P((2, 1))) == -ALPHA
    assert eta_minor_sum(P((1, 1))) == AlphaPoly((-1,))


@pytest.mark.parametrize("n", range(1, 8))
def test_alpha_zero(n):
    assert eta_alpha0(P((2, 1))) == 0
    assert eta_alpha0(P((2, 2))) == 1
    assert eta_alpha0(P((1,) * n)) == (-1) ** (n - 1) * (n - 1)


@settings(max_examples=40)
@given(partitions(max_n=11, max_width=7))
def test_minor_route_matches_colored(lam):
    assert eta_minor_sum(lam) == eta(lam)


def test_rencontres_route():
    assert eta_rencontres_at(P((2, 1)), 2, 1) == -1
    for n in range(1, 7):
        assert eta_rencontres_at(P((n,)), n, 1) == rencontres(n, 0, 1)
    for lam in partitions_of(6):
        assert eta_rencontres(lam) == eta(lam)
        assert eta_rencontres_at(lam, lam.width + 2, F(5, 2)) == eta(lam)(F(5, 2))


def test_alpha1_closed_forms():
    assert eta1_closed(BIG) == 4242315
    assert eta1_closed(P((2, 2))) == 3
    for n in range(1, 8):
        assert eta1_closed(P((n,))) == rencontres(n, 0, 1)
        for k in range(n // 2 + 1):
            assert eta1_two_row(n, k) == eta(P((n - k, k)))(1)


@pytest.mark.parametrize("lam", SMALL, ids=str)
def test_alpha1_routes(lam):
    ref = eta_via_characters(lam)
    assert eta1_closed(lam) == ref
    assert eta1_det(lam) == ref
    if len(lam) == 3:
        assert eta1_three_row(lam) == ref


def test_determinant_examples():
    assert eta1_det(P((2, 1))) == -1
    assert eta1_det(BIG) == 4242315
    assert eta1_det(P((5,))) == rencontres(5, 0, 1)
    # without the sign correction the quotient is off for (2,2)
    assert eta1_det_unsigned(P((2, 2))) == -eta1_det(P((2, 2)))


def test_alpha2_examples():
    assert eta2_closed(P((2,))) == 2
    assert eta2_closed(P((1, 1))) == -1
    assert eta2_closed(P((2, 2))) == 5
    assert eta2_two_row(4, 2) == 5
    assert eta2_doubly_even(P((2, 2))) == 5
    for m in range(1, 5):
        assert eta2_two_row(2 * m, m) == (-1) ** m * hyperoctahedral_derangements(m)


@pytest.mark.parametrize("lam", SMALL, ids=str)
def test_alpha2_routes(lam):
    ref = eta(lam)(2)
    assert eta2_closed(lam) == ref
    if has_even_columns(lam):
        assert eta2_doubly_even(lam) == ref
    if len(lam) <= 2:
        n, k = lam.n, lam.part(2)
        assert eta2_two_row(n, k) == eta2_two_row(n, k, via="subcube") == ref


def test_immanants():
    assert d_lambda(P((1, 1, 1, 1))) == -3
    assert d_lambda(P((2, 1))) == -2
    assert hook_d_formula(4, 2) == 3 == d_lambda(P((2, 1, 1)))
    for lam in partitions_of(5):
        assert d_lambda_direct(lam) == d_lambda(lam) == syt_count(lam) * eta(lam)(1)
    assert immanant_polynomial(P((2,))) == [1, 0, 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_determinant_polynomial_is_char_poly(n):
    # det(xI - K_n) = (x - n + 1)(x + 1)^(n-1)
    want = [0] * (n + 1)
    for i in range(n):
        want_i = comb(n - 1, i)
        want[i + 1] += want_i
        want[i] += -(n - 1) * want_i
    assert immanant_polynomial(P((1,) * n)) == want
    for lam in partitions_of(n):
        assert immanant_polynomial(lam) == immanant_polynomial_direct(lam)


def test_dispatch():
    lam = P((4, 2, 1))
    values = {m: eta_value(lam, 1, m) for m in ("auto", "colored", "minors", "rencontres", "closed1", "det1")}
    assert len(set(values.values())) == 1
    assert eta_value(lam, 2, "closed2") == eta_value(lam, 2, "colored")
    assert eta_value(lam, None, "minors") == eta(lam)
    with pytest.raises(DomainError):
        eta_value(lam, None, "closed1")
    with pytest.raises(DomainError):
        eta_value(lam, 1, "closed2")
    with pytest.raises(DomainError):
        eta_value(lam, 1, "nope")


def test_spectrum_tables():
    t = spectrum_table(3, 1)
    assert [(str(r.shape), r.eta, r.mult) for r in t.rows] == [("3", 2, 1), ("2,1", -1, 4), ("1,1,1", 2, 1)]
    assert t.total_multiplicity() == 6
    t = spectrum_table(2, 2)
    assert [(r.eta, r.mult) for r in t.rows] == [(2, 1), (-1, 2)]
    t = spectrum_table(4)
    assert t.rows[0].eta == AlphaPoly((0, 0, 3, 6)) and t.total_multiplicity() is None
    assert spectrum_table(5, 2).total_multiplicity() == 945
    assert multiplicity(P((2, 1)), F(1, 2)) is None
