"""Bounded enumeration of Reidemeister spectra of A^n x|_theta Z.

Only automorphisms inducing -1 on the quotient can have finite R, so the
search runs over matrices N with N M = M^-1 N. For each known shape of M
the candidates come from an explicit solved form of that equation; a
generic search over centralizer coordinates is available for any M and is
used to cross-check the solved forms.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from ..groups import AutoDesc, GroupDesc, semidirect_unchecked, check_automorphism
from ..matrices import Matrix, det
from ..rings import RingDesc, is_unit
from .catalog import (
    DOCUMENTED_DISCREPANCIES, STATED, ClosedFormSpec, closed_form,
)
from .centralizer import SPEC_TWO_AND_INF, QDecision, combine, decide_Q_spectrum, twisted_centralizer_basis
from .classify import ANTIDIAG, DIAG, GENERAL, IDENTITY, SCALAR, ThetaCase, classify_theta

__all__ = [
    "EnumBound", "SpectrumReport", "VariantComparison", "UnsupportedTheta",
    "enumerate_spectrum", "parametrized_candidates", "generic_candidates",
    "evaluate_candidates", "exponent_order", "units", "unit_corner_table",
]

GENERIC_GRID_LIMIT = 2_000_000
SMALL_COEFF = 9


class UnsupportedTheta(ValueError):
    """No solved form is known for this theta and no search bound was given."""


@dataclass(frozen=True)
class EnumBound:
    t: int = 4
    value_cap: int = 1000
    coeff_bound: int | None = None

    def __post_init__(self):
        if self.t < 0 or self.value_cap < 1:
            raise ValueError("bounds must be non-negative (value cap positive)")
        if self.coeff_bound is not None and self.coeff_bound < 1:
            raise ValueError("coefficient bound must be positive")


@dataclass(frozen=True)
class VariantComparison:
    spec: ClosedFormSpec
    missing_from_closed_form: tuple[int, ...]
    missing_from_computed: tuple[int, ...]

    @property
    def matches(self) -> bool:
        return not self.missing_from_closed_form and not self.missing_from_computed


@dataclass
class SpectrumReport:
    group: GroupDesc
    theta_case: ThetaCase
    bound: EnumBound
    computed: dict[int, AutoDesc]
    search: str
    closed_form_id: str | None = None
    comparisons: tuple[VariantComparison, ...] = ()
    candidates: int = 0
    rejected: int = 0
    decision: QDecision | None = None
    generic_only: tuple[int, ...] = ()
    notes: list[str] = field(default_factory=list)

    @property
    def values(self) -> list[int]:
        return sorted(self.computed)

    @property
    def stated(self) -> VariantComparison | None:
        return next((c for c in self.comparisons if c.spec.variant == STATED), None)

    @property
    def discrepancy(self) -> bool:
        return self.stated is not None and not self.stated.matches

    @property
    def matching_variants(self) -> list[str]:
        return [c.spec.variant for c in self.comparisons if c.matches]

    @property
    def documented(self) -> bool:
        return self.closed_form_id in DOCUMENTED_DISCREPANCIES


# -- units and coefficient sets -------------------------------------------------

def exponent_order(t: int) -> list[int]:
    """0, 1, -1, 2, -2, ..., t, -t."""
    out = [0]
    for e in range(1, t + 1):
        out += [e, -e]
    return out


def units(p: int, t: int) -> list[Fraction]:
    """+-p^e for |e| <= t, simplest first."""
    return [s * Fraction(p) ** e for e in exponent_order(t) for s in (1, -1)]


def _small_first(c: int) -> list[int]:
    out = [0]
    for k in range(1, c + 1):
        out += [k, -k]
    return out


def _trace_values(p: int, t: int, int_bound: int) -> list[Fraction]:
    seen = set()
    out = []
    for c in _small_first(int_bound):
        x = Fraction(c)
        seen.add(x)
        out.append(x)
    for e in exponent_order(t)[1:]:
        for c in _small_first(SMALL_COEFF)[1:]:
            x = c * Fraction(p) ** e
            if x not in seen:
                seen.add(x)
                out.append(x)
    return out


def _sum_of_two_squares(target: int, p: int) -> list[tuple[int, int]]:
    """Integer (x, y) with x^2 + y^2 = target, not both divisible by p."""
    out = []
    r = math.isqrt(target)
    for x in range(-r, r + 1):
        y2 = target - x * x
        y = math.isqrt(y2)
        if y * y != y2:
            continue
        for yy in {y, -y}:
            if x % p or yy % p:
                out.append((x, yy))
    return sorted(set(out), key=lambda xy: (abs(xy[0]) + abs(xy[1]), xy))


# -- solved forms of N M = M^-1 N --------------------------------------------------

def _companion(last_row: Sequence[Fraction]) -> Matrix:
    n = len(last_row)
    rows = [[int(j == i + 1) for j in range(n)] for i in range(n - 1)]
    rows.append(list(last_row))
    return Matrix.from_rows(rows)


def _companions(p: int, n: int, bound: EnumBound) -> Iterator[Matrix]:
    # For theta(1) = +-Id, R depends only on the characteristic polynomial of N,
    # and companion matrices realize every admissible one.
    sign = (-1) ** (n + 1)
    dets = units(p, bound.t)
    if n == 2:
        int_bound = bound.coeff_bound or bound.value_cap // 2 + 2
        for tr in _trace_values(p, bound.t, int_bound):
            for d in dets:
                yield _companion([sign * d, tr])
        return
    coeffs = [Fraction(c) for c in _small_first(bound.coeff_bound or 4)]
    for middle in itertools.product(coeffs, repeat=n - 1):
        for d in dets:
            yield _companion([sign * d, *middle])


def _antidiag_plus(p: int, u: Fraction, v: Fraction, t: int) -> Iterator[Matrix]:
    # uv = 1: N = [[a, b], [b v^2, a]] with a + bv, a - bv units
    for l1 in units(p, t):
        for l2 in units(p, t):
            a = (l1 + l2) / 2
            b = (l1 - l2) / 2 / v
            yield Matrix.from_rows([[a, b], [b * v * v, a]])


def _antidiag_minus(p: int, u: Fraction, v: Fraction, t: int) -> Iterator[Matrix]:
    # uv = -1: N = [[a, b], [b v^2, -a]] with a^2 + (bv)^2 a unit, i.e.
    # (a, bv) = p^m (x, y) where x^2 + y^2 = p^k
    for k in range(t + 1):
        for x, y in _sum_of_two_squares(p ** k, p):
            for m in exponent_order(t):
                scale = Fraction(p) ** m
                a, bv = x * scale, y * scale
                b = bv / v
                yield Matrix.from_rows([[a, b], [b * v * v, -a]])


def unit_corner_table(group: GroupDesc) -> dict[tuple[int, int], tuple[Fraction, Fraction]]:
    """For antidiagonal theta with uv = 1: (det(Id-N), -det(Id-MN)) at a + bv = e1, a - bv = e2."""
    case = classify_theta(group)
    if case.kind != ANTIDIAG or case.params[0] * case.params[1] != 1:
        raise ValueError("corner table needs an antidiagonal theta with uv = 1")
    v = case.params[1]
    I = Matrix.identity(2)
    out = {}
    for e1 in (1, -1):
        for e2 in (1, -1):
            a, bv = Fraction(e1 + e2, 2), Fraction(e1 - e2, 2)
            N = Matrix.from_rows([[a, bv / v], [bv * v, a]])
            out[(e1, e2)] = (det(I - N), -det(I - group.theta @ N))
    return out


def parametrized_candidates(group: GroupDesc, case: ThetaCase, bound: EnumBound) -> Iterator[Matrix]:
    """Candidates N for eps = -1 from the solved form for this theta shape."""
    p, t, n = group.ring.p, bound.t, group.n
    if case.kind == SCALAR:
        if case.sub in ("plus", "minus"):
            for k in units(p, t):
                yield Matrix(1, 1, [k])
    elif case.kind == DIAG:
        if case.sub == "a":
            yield from _companions(p, 2, bound)
        elif case.sub == "b":
            for x in units(p, t):
                for y in units(p, t):
                    yield Matrix.diag([x, y])
        elif case.sub == "c":
            for x in units(p, t):
                for y in units(p, t):
                    yield Matrix.from_rows([[0, x], [y, 0]])
    elif case.kind == ANTIDIAG:
        u, v = case.params
        if case.sub == "a":
            yield from _antidiag_plus(p, u, v, t)
        elif case.sub == "b":
            yield from _antidiag_minus(p, u, v, t)
    elif case.kind == IDENTITY:
        yield from _companions(p, n, bound)
    else:
        raise UnsupportedTheta("general theta requires explicit search bound")


def _primitive(B: Matrix) -> Matrix:
    lcm = 1
    for x in B.entries:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in B.entries]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    return Matrix(B.rows, B.cols, [x // g for x in ints])


def generic_candidates(group: GroupDesc, t: int, coeff_bound: int) -> Iterator[Matrix]:
    """Integer combinations of the twisted centralizer basis with coefficients +-c p^e.

    Only combinations with entries in the ring and unit determinant are
    yielded. Bounded: absence of a value is not a proof of anything.
    """
    basis = [_primitive(B) for B in twisted_centralizer_basis(group.theta)]
    if not basis:
        return
    ring = group.ring
    p = ring.p
    coeffs = [Fraction(0)]
    seen = {Fraction(0)}
    for e in exponent_order(t):
        for c in _small_first(coeff_bound)[1:]:
            x = c * Fraction(p) ** e
            if x not in seen:
                seen.add(x)
                coeffs.append(x)
    if len(coeffs) ** len(basis) > GENERIC_GRID_LIMIT:
        raise UnsupportedTheta(
            f"generic search grid {len(coeffs)}^{len(basis)} exceeds {GENERIC_GRID_LIMIT}; "
            "lower --bound or --coeff-bound")
    for c in itertools.product(coeffs, repeat=len(basis)):
        N = combine(basis, c)
        if N.is_over(ring) and is_unit(det(N), ring):
            yield N


# -- evaluation --------------------------------------------------------------

def _evaluate_chunk(group: GroupDesc, chunk: Sequence[tuple[int, Matrix]], value_cap: int):
    found: dict[int, tuple[int, Matrix]] = {}
    rejected = 0
    for idx, N in chunk:
        auto = AutoDesc(N, -1)
        if not check_automorphism(group, auto):
            rejected += 1
            continue
        total = semidirect_unchecked(group, auto).total
        if total.is_finite and total.value <= value_cap:
            k = total.value
            if k not in found or idx < found[k][0]:
                found[k] = (idx, N)
    return found, rejected


def evaluate_candidates(group: GroupDesc, candidates: Iterable[Matrix], value_cap: int,
                        jobs: int = 1) -> tuple[dict[int, AutoDesc], int, int]:
    """R for each candidate; returns ({value: first witness}, #candidates, #rejected).

    The witness kept for a value is the earliest candidate in iteration
    order, so the result does not depend on ``jobs``.
    """
    indexed = list(enumerate(candidates))
    if jobs > 1 and len(indexed) > 1:
        size = max(1, math.ceil(len(indexed) / (jobs * 4)))
        chunks = [indexed[i:i + size] for i in range(0, len(indexed), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_evaluate_chunk, [group] * len(chunks), chunks,
                                  [value_cap] * len(chunks)))
    else:
        parts = [_evaluate_chunk(group, indexed, value_cap)]
    merged: dict[int, tuple[int, Matrix]] = {}
    rejected = 0
    for found, rej in parts:
        rejected += rej
        for k, (idx, N) in found.items():
            if k not in merged or idx < merged[k][0]:
                merged[k] = (idx, N)
    computed = {k: AutoDesc(merged[k][1], -1) for k in sorted(merged)}
    return computed, len(indexed), rejected


def _compare(specs: Sequence[ClosedFormSpec] | None, values: Iterable[int],
             bound: EnumBound) -> tuple[VariantComparison, ...]:
    if not specs:
        return ()
    values = set(values)
    out = []
    for spec in specs:
        extra = tuple(sorted(k for k in values if not spec.contains(k)))
        missing = tuple(sorted(spec.members(bound.value_cap, bound.t) - values))
        out.append(VariantComparison(spec, extra, missing))
    return tuple(out)


def _safety_net_reference(group: GroupDesc, case: ThetaCase, bound: EnumBound) -> set[int]:
    # exponents large enough that every value <= cap is reachable by the solved form
    p = group.ring.p
    t_big = max(bound.t, 1)
    while p ** t_big <= 2 * bound.value_cap + 2:
        t_big += 1
    wide = EnumBound(t_big + 1, bound.value_cap, bound.value_cap + 2)
    computed, _, _ = evaluate_candidates(group, parametrized_candidates(group, case, wide),
                                         bound.value_cap)
    return set(computed)


def enumerate_spectrum(group: GroupDesc, bound: EnumBound = EnumBound(), jobs: int = 1) -> SpectrumReport:
    case = classify_theta(group)
    ring = group.ring
    if ring.kind == RingDesc.RATIONALS:
        decision = decide_Q_spectrum(group.theta)
        computed = {}
        if decision.verdict == SPEC_TWO_AND_INF:
            computed[2] = AutoDesc(decision.witness, -1)
        report = SpectrumReport(group, case, bound, computed, "decided", decision=decision)
        report.closed_form_id = case.clause
        report.comparisons = _compare(closed_form(case.clause), computed, bound)
        return report

    if case.kind == GENERAL:
        if bound.coeff_bound is None:
            raise UnsupportedTheta("general theta requires explicit search bound")
        candidates = generic_candidates(group, bound.t, bound.coeff_bound)
        computed, count, rejected = evaluate_candidates(group, candidates, bound.value_cap, jobs)
        report = SpectrumReport(group, case, bound, computed, "bounded search", candidates=count,
                                rejected=rejected)
        report.notes.append("bounded search - absence is not proof of R-infinity")
        return report

    computed, count, rejected = evaluate_candidates(
        group, parametrized_candidates(group, case, bound), bound.value_cap, jobs)
    report = SpectrumReport(group, case, bound, computed, "parametrized", candidates=count,
                            rejected=rejected)
    if count == 0:
        report.notes.append("no automorphism induces -1 on the quotient: spectrum is {inf}")
    report.closed_form_id = case.clause
    report.comparisons = _compare(closed_form(case.clause, ring.p), computed, bound)
    if bound.coeff_bound is not None:
        generic, _, _ = evaluate_candidates(
            group, generic_candidates(group, bound.t, bound.coeff_bound), bound.value_cap, jobs)
        reference = _safety_net_reference(group, case, bound)
        report.generic_only = tuple(sorted(set(generic) - reference))
    return report
