import json
from fractions import Fraction as F
from math import factorial

import pytest

from jackd.errors import SingularParameterError
from jackd.jack_oracle import (
    CharacterTable,
    character_table,
    class_size,
    eta_via_characters,
    eta_via_jack,
    is_dominance_triangular,
    jack_in_power_basis,
    mn_character,
    power_to_monomial,
    skew_syt_count,
    syt_count,
)
from jackd.partitions import Partition, partitions_of

P = Partition


def test_power_to_monomial():
    assert power_to_monomial(P((2,))).coeffs == {P((2,)): 1}
    assert power_to_monomial(P((1, 1))).coeffs == {P((2,)): 1, P((1, 1)): 2}
    assert power_to_monomial(P((2, 1))).coeffs == {P((3,)): 1, P((2, 1)): 1}


@pytest.mark.parametrize("alpha", [F(1, 2), 1, 3, 5])
def test_small_jacks(alpha):
    j2 = jack_in_power_basis(P((2,)), alpha)
    assert j2[P((1, 1))] == 1 and j2[P((2,))] == alpha
    j11 = jack_in_power_basis(P((1, 1)), alpha)
    assert j11[P((1, 1))] == 1 and j11[P((2,))] == -1
    assert jack_in_power_basis(P((1,)), alpha).coeffs == {P((1,)): 1}


def test_alpha_zero_is_singular():
    with pytest.raises(SingularParameterError):
        jack_in_power_basis(P((2, 1)), 0)


@pytest.mark.parametrize("alpha", [1, 2, F(7, 3)])
@pytest.mark.parametrize("lam", partitions_of(5))
def test_jacks_are_triangular(lam, alpha):
    assert is_dominance_triangular(lam, alpha)


def test_eta_via_jack_examples():
    assert eta_via_jack(P((2,)), 1) == 1
    for a in (1, 2, F(1, 3)):
        assert eta_via_jack(P((1, 1)), a) == -1
    assert eta_via_jack(P((2, 1)), 1) == -1


def test_characters():
    assert mn_character(P((2, 1)), P((3,))) == -1
    assert all(mn_character(P((4,)), mu) == 1 for mu in partitions_of(4))
    assert mn_character(P((1, 1, 1)), P((1, 1, 1))) == 1
    assert eta_via_characters(P((2, 1))) == -1
    assert eta_via_characters(P((4,))) == 9
    assert eta_via_characters(P((1, 1, 1, 1))) == -3


@pytest.mark.parametrize("n", range(1, 8))
def test_column_orthogonality(n):
    shapes = partitions_of(n)
    assert sum(class_size(mu) for mu in shapes) == factorial(n)
    for mu in shapes:
        col = sum(mn_character(l, mu) ** 2 for l in shapes)
        assert col * class_size(mu) == factorial(n)


def test_tableaux():
    assert syt_count(P((2, 1))) == 2
    assert syt_count(P((2, 2))) == 2
    assert syt_count(P((3, 2))) == 5
    assert skew_syt_count(P((2, 1)), P((1,))) == 2
    assert all(syt_count(l) == mn_character(l, [1] * 6) for l in partitions_of(6))


def test_character_cache(tmp_path):
    t = character_table(5, tmp_path)
    path = tmp_path / "chartable-5.json"
    assert path.exists()
    again = character_table(5, tmp_path)
    assert again.values == t.values
    assert CharacterTable.from_json(path.read_text(), 5).values == t.values


def test_corrupt_cache_is_recomputed(tmp_path):
    path = tmp_path / "chartable-4.json"
    path.write_text("{not json")
    t = character_table(4, tmp_path)
    assert t(P((4,)), P((1, 1, 1, 1))) == 1
    data = json.loads(path.read_text())
    data["rows"]["3,1"][-1] = 7
    path.write_text(json.dumps(data))
    assert character_table(4, tmp_path)(P((3, 1)), P((1, 1, 1, 1))) == 3


def test_no_cache_dir_writes_nothing(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    character_table(4)
    assert list(tmp_path.iterdir()) == []
