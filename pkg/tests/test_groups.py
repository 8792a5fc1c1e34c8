from fractions import Fraction

import pytest

from reidemeister.cokernel import INF, ExtNat
from reidemeister.groups import (
    AutoDesc, GroupDesc, IncompatibleAutomorphism, brute_force_cyclic, check_automorphism,
    reidemeister_abelian, reidemeister_cyclic_endo, reidemeister_semidirect,
)
from reidemeister.matrices import Matrix
from reidemeister.rings import Q, Z, z_localized


def M(*rows):
    return Matrix.from_rows(rows)


def test_group_validation():
    with pytest.raises(ValueError, match="not invertible"):
        GroupDesc(z_localized(2), M([0, 3], [1, 0]))
    with pytest.raises(ValueError, match="outside"):
        GroupDesc(z_localized(2), M([Fraction(1, 3)]))
    with pytest.raises(ValueError):
        GroupDesc(Z, M([1]))
    with pytest.raises(ValueError):
        GroupDesc(Q, Matrix(1, 2, [1, 1]))


@pytest.mark.parametrize("group, auto, expected", [
    (GroupDesc(Q, M([2, 0], [0, Fraction(1, 2)])), AutoDesc(M([0, 1], [1, 0]), -1), True),
    (GroupDesc(z_localized(3), M([0, 1], [-1, 0])), AutoDesc(Matrix.identity(2), 1), True),
    (GroupDesc(Q, M([2, 0], [0, 3])), AutoDesc(Matrix.identity(2), -1), False),
    (GroupDesc(z_localized(2), M([1])), AutoDesc(M([3]), -1), False),
])
def test_check_automorphism(group, auto, expected):
    assert check_automorphism(group, auto) is expected


def test_check_automorphism_dimension_mismatch():
    with pytest.raises(ValueError):
        check_automorphism(GroupDesc(Q, M([2])), AutoDesc(Matrix.identity(2), 1))


@pytest.mark.parametrize("N, ring, expected", [
    (M([-2]), z_localized(2), ExtNat(3)),
    (Matrix.identity(2), Q, INF),
    (M([0, 1], [-1, 5]), z_localized(3), ExtNat(1)),
])
def test_reidemeister_abelian(N, ring, expected):
    assert reidemeister_abelian(N, ring) == expected


def test_reidemeister_semidirect_examples():
    g = GroupDesc(z_localized(3), M([-1]))
    r = reidemeister_semidirect(g, AutoDesc(M([3]), -1))
    assert r.total == ExtNat(6) and r.parts == (ExtNat(2), ExtNat(4))
    assert str(r) == "6 (= 2 + 4)"
    assert reidemeister_semidirect(GroupDesc(Q, M([1])), AutoDesc(M([5]), -1)).total == ExtNat(2)
    plus = reidemeister_semidirect(g, AutoDesc(M([3]), 1))
    assert plus.total == INF and plus.parts is None


def test_reidemeister_semidirect_rejects_incompatible():
    with pytest.raises(IncompatibleAutomorphism, match="incompatible \\(N, eps\\) for this theta"):
        reidemeister_semidirect(GroupDesc(Q, M([2, 0], [0, 3])), AutoDesc(Matrix.identity(2), -1))


def test_auto_desc_defaults_and_validation():
    a = AutoDesc(Matrix.identity(2), 1)
    assert a.z == (0, 0)
    with pytest.raises(ValueError):
        AutoDesc(Matrix.identity(2), 0)
    with pytest.raises(ValueError):
        AutoDesc(Matrix.identity(2), 1, (1,))


@pytest.mark.parametrize("m, d, expected", [(5, 3, 1), (6, 3, 2), (7, 1, 7), (12, -3, 4)])
def test_cyclic(m, d, expected):
    assert reidemeister_cyclic_endo(m, d) == expected
    assert brute_force_cyclic(m, d) == expected
