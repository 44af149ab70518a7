from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from conftest import partitions
from jackd.colored import (
    colored_derangement_counts,
    colored_matching_count,
    colored_matching_derangements,
    colored_permutation_counts,
    double_factorial,
    hyperoctahedral_counts,
    hyperoctahedral_derangements,
    jack_derangement_number,
    marked_fixed_point_counts,
    matching_derangement_count,
    matching_derangement_count_enumerated,
    prob,
    rencontres,
    shifted_rencontres,
    subcube_fixing_derangements,
)
from jackd.errors import DomainError, SizeError
from jackd.exactalg import AlphaPoly
from jackd.hooks import principal_lower_product
from jackd.partitions import Partition, partitions_of
from jackd.spectra import eta

P = Partition


def test_profile_examples():
    assert colored_derangement_counts(P((4,))).counts == (6, 3, 0, 0)
    assert colored_derangement_counts(P((2, 1))).counts == (1, 0)
    prof = colored_derangement_counts(P((3, 2)))
    assert (prof.d(1), prof.d(2), prof.d(3)) == (2, 2, 0)
    assert prof.to_json() == {"shape": "3,2", "d": [2, 2, 0]}


@settings(max_examples=40)
@given(partitions(max_n=10, max_width=6))
def test_counting_methods_agree(lam):
    dp = colored_derangement_counts(lam)
    assert colored_derangement_counts(lam, method="bruteforce") == dp
    assert colored_derangement_counts(lam, method="materialize") == dp


def test_method_caps():
    with pytest.raises(SizeError):
        colored_derangement_counts(P((10,)), method="bruteforce")
    with pytest.raises(DomainError):
        colored_derangement_counts(P((2,)), method="guess")


def test_derangement_numbers():
    assert jack_derangement_number(P((2, 1))) == AlphaPoly((0, 1))
    assert jack_derangement_number(P((2, 2))) == AlphaPoly((1, 2))
    assert jack_derangement_number(P((10, 6, 3, 1)))(1) == 4242315


@given(partitions(max_n=12, max_width=6))
def test_totals_are_hook_products(lam):
    # all colored permutations, counted by cycles, sum to the principal hook product
    counts = colored_permutation_counts(lam)
    w = lam.width
    assert sum(counts) == principal_lower_product(lam)(1)
    assert sum(c * 2 ** (w - k) for k, c in enumerate(counts)) == principal_lower_product(lam)(2)
    assert colored_matching_count(lam) == principal_lower_product(lam)(2)


def test_alpha_zero_profile_tail():
    for lam in partitions_of(7):
        heights = lam.conjugate()
        expected = 1
        for h in heights:
            expected *= h - 1
        assert colored_derangement_counts(lam).d(lam.width) == expected


def test_rencontres():
    assert rencontres(4, 0, 1) == 9
    assert rencontres(2, 0, 2) == 5
    for n in range(6):
        assert rencontres(n, n, F(3, 2)) == 1
    for a in (1, 2, F(1, 2)):
        assert sum(prob(5, k, a) for k in range(6)) == 1
    assert shifted_rencontres(5, 2) == 2 * rencontres(5, 2, 1)
    with pytest.raises(DomainError):
        rencontres(3, 0, 0)


def test_matchings():
    assert [matching_derangement_count(n) for n in range(1, 6)] == [0, 2, 8, 60, 544]
    for n in range(1, 5):
        assert matching_derangement_count_enumerated(n) == matching_derangement_count(n)
    assert double_factorial(7) == 105
    assert colored_matching_derangements(P((4,))) == matching_derangement_count(4)
    assert colored_matching_derangements(P((2, 2))) == 5
    assert colored_matching_derangements(P((1, 1))) == 1


@settings(max_examples=30)
@given(partitions(max_n=9, max_width=5))
def test_matchings_give_eta_at_two(lam):
    sign = (-1) ** (lam.n - lam.width)
    assert sign * colored_matching_derangements(lam) == eta(lam)(2)


def test_marked_fixed_points():
    lam = P((3, 2))
    counts = marked_fixed_point_counts(lam)
    # no marks: every colored permutation, by cycle count
    assert [counts.get((0, c), 0) for c in range(4)] == colored_permutation_counts(lam)


def test_hyperoctahedral():
    c3 = hyperoctahedral_counts(3)
    assert (c3.derangements, c3.balanced, c3.totally_unbalanced) == (29, 15, 15)
    assert hyperoctahedral_counts(4).derangements == 233
    assert [hyperoctahedral_derangements(m) for m in range(5)] == [1, 1, 5, 29, 233]
    assert subcube_fixing_derangements(2, 2) == 5
    for m in range(5):
        for k in range(m + 1):
            assert subcube_fixing_derangements(m, k) == subcube_fixing_derangements(m, k, method="formula")
