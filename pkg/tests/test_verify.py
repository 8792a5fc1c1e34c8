from dataclasses import replace
import pytest

from conftest import mat
from reidemeister.cokernel import ExtNat
from reidemeister.groups import AutoDesc, GroupDesc, reidemeister_semidirect
from reidemeister.rings import prime_to_p_part, unit_value, z_localized
from reidemeister.spectrum.catalog import DOCUMENTED_DISCREPANCIES, PROOF, STATED, closed_form
from reidemeister.spectrum.enumerate import EnumBound
from reidemeister.verify import DISCREPANCY, FAIL, PASS, replay_witness, run_verification


@pytest.fixture(scope="module")
def small_run():
    return run_verification(EnumBound(2, 200))


def test_no_failures_and_only_documented_discrepancies(small_run):
    assert not [r.line() for r in small_run if r.status == FAIL]
    flagged = {r.clause for r in small_run if r.status == DISCREPANCY}
    assert flagged <= set(DOCUMENTED_DISCREPANCIES)
    assert "P3.1b[r=1]" in flagged


def test_clause_lines(small_run):
    lines = {r.clause: r for r in small_run}
    assert lines["P2.5a"].status == PASS
    assert lines["P3.6a"].status == PASS
    assert lines["P3.1b[r=1]"].line().startswith("P3.1b[r=1] DISCREPANCY")
    assert "proof variant" in lines["P3.1b[r=1]"].detail


def test_smaller_bound_is_still_sound():
    assert not [r for r in run_verification(EnumBound(1, 60), primes=(2, 3)) if r.status == FAIL]


def test_corrupt_fixture_fails_with_diff():
    def corrupted(clause, p):
        specs = closed_form(clause, p)
        if clause == "P3.5b" and specs:
            broken = replace(specs[0], predicate=lambda k: specs[0].predicate(k) and k != 12,
                             generator=lambda cap, ecap: [k for k in specs[0].generator(cap, ecap) if k != 12])
            return (broken,)
        return specs

    results = run_verification(EnumBound(2, 100), primes=(2,), catalog=corrupted)
    bad = [r for r in results if r.status == FAIL]
    assert bad and all(r.clause == "P3.5b" for r in bad)
    assert "computed but not in set: {12}" in bad[0].detail


# Counterexamples to stated sets, each replayed through Smith normal form.
COUNTEREXAMPLES = [
    ("P3.5a[r=s=-1]", STATED, 2, [[-1, 0], [0, -1]], [[0, 1], [-1, 1]], 4),
    ("P3.6b", STATED, 2, [[0, 1], [-1, 0]], [[1, -1], [-1, -1]], 2),
    ("P3.7a[r=s=-1]", STATED, 3, [[-1, 0], [0, -1]], [[0, -1], [1, 3]], 6),
    ("P3.8a", STATED, 3, [[0, 1], [1, 0]], [[4, -5], [-5, 4]], 36),
    ("P3.8b", PROOF, 5, [[0, 1], [-1, 0]], [[1, -2], [-2, -1]], 8),
    ("P3.1b[r=1]", STATED, 3, [[1]], [[9]], 16),
]


@pytest.mark.parametrize("clause, variant, p, theta, N, value", COUNTEREXAMPLES,
                         ids=[f"{c[0]}-{c[1]}" for c in COUNTEREXAMPLES])
def test_counterexample_replays(clause, variant, p, theta, N, value):
    group = GroupDesc(z_localized(p), mat(*theta))
    auto = AutoDesc(mat(*N), -1)
    assert reidemeister_semidirect(group, auto).total == ExtNat(value)
    assert replay_witness(group, auto) == ExtNat(value)
    spec = next(s for s in closed_form(clause, p) if s.variant == variant)
    assert not spec.contains(value)


def test_inverse_pair_over_z2_never_gives_four():
    # N = [[0,b],[c,0]] gives R = 2 v(1 - bc) with bc = +-2^j, and v(1 - bc) is odd
    for sign in (1, -1):
        for j in range(-40, 41):
            bc = unit_value(sign, j, 2)
            if bc != 1:
                assert prime_to_p_part(1 - bc, 2) % 2 == 1
    assert closed_form("P3.5c", 2)[0].contains(4)
