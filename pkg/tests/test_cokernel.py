from fractions import Fraction

import pytest

from reidemeister.cokernel import INF, ExtNat, coker_card_formula, coker_card_oracle, coker_card_Z_bruteforce
from reidemeister.matrices import Matrix
from reidemeister.rings import Q, Z, z_localized


def M(*rows):
    return Matrix.from_rows(rows)


@pytest.mark.parametrize("m, ring, expected", [
    (M([2, 0], [0, 3]), Q, ExtNat(1)),
    (M([6]), z_localized(2), ExtNat(3)),
    (M([1, 2], [2, 4]), z_localized(3), INF),
    (M([0]), Q, INF),
    (M([2, 4], [6, 8]), Z, ExtNat(8)),
    (M([Fraction(1, 2), 0], [0, 3]), z_localized(2), ExtNat(3)),
])
def test_formula(m, ring, expected):
    assert coker_card_formula(m, ring) == expected


def test_formula_rejects_entries_outside_ring():
    with pytest.raises(ValueError):
        coker_card_formula(M([Fraction(1, 3)]), z_localized(2))
    with pytest.raises(ValueError):
        coker_card_formula(M([Fraction(1, 2)]), Z)


@pytest.mark.parametrize("m, p, expected", [
    (M([Fraction(1, 2), 0], [0, 3]), 2, ExtNat(3)),
    (Matrix.identity(2), 7, ExtNat(1)),
    (M([2, 4], [6, 8]), 2, ExtNat(1)),
    (M([2, 4], [6, 8]), 3, ExtNat(8)),
    (M([2, 4], [6, 8]), 5, ExtNat(8)),
    (M([1, 1], [1, 1]), 3, INF),
])
def test_oracle(m, p, expected):
    assert coker_card_oracle(m, p) == expected
    assert coker_card_formula(m, z_localized(p)) == expected


@pytest.mark.parametrize("m, modulus, expected", [
    (Matrix.identity(2), 5, 1), (M([2]), 4, 2), (M([0]), 3, 3), (M([2, 0], [0, 3]), 6, 6),
])
def test_bruteforce(m, modulus, expected):
    assert coker_card_Z_bruteforce(m, modulus) == expected


def test_bruteforce_agrees_with_smith_form_when_modulus_is_a_multiple():
    # coker(M) is finite of order |det| and is killed by |det|, so reducing mod |det| keeps it
    for m in (M([2, 1], [0, 3]), M([4, 6], [2, 1]), M([3, 0], [0, 2])):
        d = coker_card_formula(m, Z).value
        assert coker_card_Z_bruteforce(m, d) == d


def test_extnat_algebra():
    assert ExtNat(2) + ExtNat(3) == ExtNat(5)
    assert INF + ExtNat(1) == INF and ExtNat(1) + INF == INF
    assert str(INF) == "inf" and str(ExtNat(4)) == "4"
    assert ExtNat.parse("inf") == INF and ExtNat.parse("12") == ExtNat(12)
    assert ExtNat(5) < INF and ExtNat(2) < ExtNat(3)
    with pytest.raises(ValueError):
        ExtNat(0)
