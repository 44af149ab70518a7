import pytest
from hypothesis import given

from conftest import partitions
from jackd.errors import DomainError, SizeError
from jackd.partitions import (
    Cell,
    Partition,
    conjugate,
    covers_up,
    dominance_upset,
    dominates,
    double_rows,
    fixed_point_free,
    frobenius,
    lattice_nu,
    partition_count,
    partitions_of,
    remove_columns,
    z_factor,
)

P = Partition


def test_partitions_of_small():
    assert partitions_of(0) == [P(())]
    assert partitions_of(4) == [P((4,)), P((3, 1)), P((2, 2)), P((2, 1, 1)), P((1, 1, 1, 1))]


@pytest.mark.parametrize("n,count", [(1, 1), (5, 7), (8, 22), (12, 77)])
def test_partition_counts(n, count):
    assert len(partitions_of(n)) == count == partition_count(n)


def test_partition_cap():
    with pytest.raises(SizeError):
        partitions_of(41)


@pytest.mark.parametrize("bad", [(1, 2), (2, -1)])
def test_invalid_parts(bad):
    with pytest.raises(DomainError):
        P(bad)


def test_parse_round_trip():
    lam = P.parse("10,6,3,1")
    assert lam == P((10, 6, 3, 1)) and str(lam) == "10,6,3,1"
    assert P.parse("") == P(())
    with pytest.raises(DomainError):
        P.parse("3,a")


def test_conjugate_examples():
    assert conjugate(P((10, 6, 3, 1))) == P((4, 3, 3, 2, 2, 2, 1, 1, 1, 1))
    assert conjugate(P((5,))) == P((1,) * 5)
    assert conjugate(P((2, 2))) == P((2, 2))


@given(partitions(max_n=14))
def test_conjugate_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().n == lam.n


def test_arm_leg():
    lam = P((10, 6, 3, 1))
    assert lam.arm(Cell(1, 1)) == 9 and lam.leg(Cell(1, 1)) == 3
    assert lam.has_cell((4, 1)) and not lam.has_cell((4, 2))
    with pytest.raises(DomainError):
        lam.arm(Cell(5, 1))


def test_dominance_examples():
    assert dominates(P((3, 1)), P((2, 2)))
    assert not dominates(P((2, 2)), P((3, 1)))
    assert not dominates(P((2, 1, 1)), P((2, 2)))
    assert dominates(P((2, 2)), P((2, 1, 1)))


def test_covers_examples():
    assert covers_up(P((2, 2))) == [P((3, 1))]
    assert covers_up(P((6,))) == []
    assert sorted(covers_up(P((2, 1, 1)))) == sorted([P((2, 2)), P((3, 1))])


@pytest.mark.parametrize("n", range(1, 10))
def test_covers_generate_dominance(n):
    shapes = partitions_of(n)
    for mu in shapes:
        assert dominance_upset(mu) == {lam for lam in shapes if dominates(lam, mu)}


def test_frobenius():
    f = frobenius(P((10, 6, 3, 1)))
    assert f.a == (9, 4, 0) and f.b == (3, 1, 0) and f.d == 3
    assert frobenius(P((1,))).a == (0,)
    f = frobenius(P((2, 2)))
    assert (f.a, f.b) == ((1, 0), (1, 0))


@given(partitions(max_n=14))
def test_frobenius_round_trip(lam):
    f = frobenius(lam)
    assert f.to_partition() == lam
    assert all(x > y for x, y in zip(f.a, f.a[1:]))


def test_lattice_nu():
    assert lattice_nu(P((10, 6, 3, 1))) == (0, 5, 9)
    assert lattice_nu(P((7,))) == (0,)
    assert lattice_nu(P((2, 2))) == (0, 1)


@given(partitions(max_n=14))
def test_lattice_nu_increasing(lam):
    nu = lattice_nu(lam)
    if lam:
        assert nu[0] == 0
    assert all(x < y for x, y in zip(nu, nu[1:]))


def test_fixed_point_free_and_z():
    assert fixed_point_free(P((2, 2)))
    assert not fixed_point_free(P((3, 1)))
    assert z_factor(P((2, 1, 1))) == 4
    assert z_factor(P((1, 1, 1))) == 6


def test_remove_columns_and_double_rows():
    assert remove_columns(P((2, 1)), [1]) == P((1,))
    assert remove_columns(P((2, 1)), [2]) == P((1, 1))
    assert double_rows(P((3, 1))) == P((6, 2))
