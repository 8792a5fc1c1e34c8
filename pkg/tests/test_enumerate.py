from fractions import Fraction

import pytest

from conftest import mat
from reidemeister.cokernel import ExtNat, coker_card_oracle
from reidemeister.groups import GroupDesc, reidemeister_semidirect
from reidemeister.matrices import Matrix
from reidemeister.rings import Q, z_localized
from reidemeister.spectrum.catalog import closed_form
from reidemeister.spectrum.enumerate import (
    EnumBound, UnsupportedTheta, enumerate_spectrum, exponent_order, unit_corner_table, units,
)


def zp(p, *rows):
    return GroupDesc(z_localized(p), mat(*rows))


def test_scalar_minus_one_over_z3():
    report = enumerate_spectrum(zp(3, [-1]), EnumBound(5, 1000))
    assert report.values == [6, 18, 54, 162, 486]
    assert report.comparisons[0].matches


def test_diag_one_minus_one_over_z2():
    report = enumerate_spectrum(zp(2, [1, 0], [0, -1]), EnumBound(4, 1000))
    spec = closed_form("P3.5b", 2)[0]
    assert all(spec.contains(k) for k in report.values)
    assert spec.members(1000, 4) <= set(report.values)


def test_direct_product_over_z3():
    report = enumerate_spectrum(zp(3, [1, 0], [0, 1]), EnumBound(3, 40))
    assert report.values == [2 * n for n in range(1, 21) if n % 3]


def test_witnesses_replay():
    for group in (zp(2, [0, 1], [1, 0]), zp(3, [0, 1], [-1, 0]), zp(5, [5, 0], [0, Fraction(1, 5)]),
                  zp(3, [-1, 0], [0, -1])):
        report = enumerate_spectrum(group, EnumBound(3, 300))
        assert report.values
        for k, auto in report.computed.items():
            assert auto.eps == -1
            assert reidemeister_semidirect(group, auto).total == ExtNat(k)
            I = Matrix.identity(2)
            p = group.ring.p
            assert coker_card_oracle(I - auto.N, p) + coker_card_oracle(I - group.theta @ auto.N, p) == ExtNat(k)


def test_empty_parametrization_means_only_infinity():
    report = enumerate_spectrum(zp(2, [2, 0], [0, 4]))
    assert report.values == [] and report.candidates == 0
    assert any("spectrum is {inf}" in note for note in report.notes)


def test_general_theta_needs_bound():
    group = zp(2, [1, 1], [0, 1])
    with pytest.raises(UnsupportedTheta, match="general theta requires explicit search bound"):
        enumerate_spectrum(group)
    report = enumerate_spectrum(group, EnumBound(1, 50, 1))
    assert report.search == "bounded search" and 6 in report.values


def test_rationals_reduce_to_the_decision():
    report = enumerate_spectrum(GroupDesc(Q, mat([2, 0], [0, Fraction(1, 2)])))
    assert report.values == [2] and report.decision is not None
    assert enumerate_spectrum(GroupDesc(Q, mat([2, 0], [0, 3]))).values == []


@pytest.mark.parametrize("theta", [[[0, 1], [1, 0]], [[0, 2], [Fraction(1, 2), 0]], [[0, -4], [Fraction(-1, 4), 0]]])
def test_unit_corner_table(theta):
    table = unit_corner_table(zp(2, *theta))
    assert table == {(1, 1): (0, 0), (1, -1): (0, 0), (-1, 1): (0, -4), (-1, -1): (4, 0)}


@pytest.mark.parametrize("group", [
    zp(2, [0, 1], [-1, 0]), zp(3, [0, 1], [1, 0]), zp(5, [0, 1], [-1, 0]), zp(2, [1, 0], [0, -1]),
    zp(3, [3, 0], [0, Fraction(1, 3)]), zp(2, [0, 2], [Fraction(1, 2), 0]), zp(3, [-1]),
])
def test_generic_search_finds_nothing_new(group):
    report = enumerate_spectrum(group, EnumBound(2, 200, 2))
    assert report.generic_only == ()


def test_parallel_enumeration_is_deterministic():
    group = zp(3, [0, 1], [1, 0])
    serial = enumerate_spectrum(group, EnumBound(3, 500))
    parallel = enumerate_spectrum(group, EnumBound(3, 500), jobs=2)
    assert serial.computed == parallel.computed


def test_exponent_order_and_units():
    assert exponent_order(2) == [0, 1, -1, 2, -2]
    assert units(2, 1) == [1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2)]


def test_bound_validation():
    with pytest.raises(ValueError):
        EnumBound(-1)
    with pytest.raises(ValueError):
        EnumBound(2, 0)
