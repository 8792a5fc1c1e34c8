"""Solutions of N M = M^-1 N over Q and the {inf} / {2, inf} decision for Q^n."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from ..matrices import Matrix, det, nullspace

__all__ = [
    "twisted_centralizer_basis", "combine", "decide_Q_spectrum", "QDecision",
    "SPEC_INF_ONLY", "SPEC_TWO_AND_INF", "shell_grid",
]

SPEC_INF_ONLY = "SPEC_INF_ONLY"
SPEC_TWO_AND_INF = "SPEC_TWO_AND_INF"


def twisted_centralizer_basis(M: Matrix) -> list[Matrix]:
    """Basis of the Q-space {N : N M = M^-1 N}.

    The n^2 unknowns are the entries of N in row-major order; the basis is
    read off the reduced echelon form, one element per free entry.
    """
    if not M.is_square:
        raise ValueError("theta(1) must be square")
    if det(M) == 0:
        raise ValueError("theta(1) is singular")
    n = M.rows
    Minv = M.inverse()
    eqs = []
    for i in range(n):
        for k in range(n):
            row = [Fraction(0)] * (n * n)
            for j in range(n):
                row[i * n + j] += M[j, k]
                row[j * n + k] -= Minv[i, j]
            eqs.append(row)
    system = Matrix(n * n, n * n, [x for r in eqs for x in r])
    return [Matrix(n, n, v) for v in nullspace(system)]


def combine(basis: Sequence[Matrix], coeffs: Sequence) -> Matrix:
    n = basis[0].rows
    out = [Fraction(0)] * (n * n)
    for c, B in zip(coeffs, basis):
        if c:
            for idx, x in enumerate(B.entries):
                out[idx] += c * x
    return Matrix(n, n, out)


def shell_grid(d: int, top: int) -> Iterator[tuple[int, ...]]:
    """All points of {0..top}^d, ordered by max-coordinate shell, then lexicographically."""
    yield (0,) * d
    for s in range(1, top + 1):
        for pt in itertools.product(range(s + 1), repeat=d):
            if s in pt:
                yield pt


@dataclass(frozen=True)
class QDecision:
    verdict: str
    basis: tuple[Matrix, ...]
    witness: Matrix | None = None
    coefficients: tuple[int, ...] | None = None
    certificate: str = ""


def decide_Q_spectrum(M: Matrix) -> QDecision:
    """Decide whether Q^n x|_M Z has an automorphism with R = 2.

    Such an automorphism exists iff some N in the twisted centralizer has
    det(N), det(Id - N), det(Id - M N) all nonzero. Each of the three is a
    polynomial of degree <= n in the basis coordinates, so it is identically
    zero iff it vanishes on {0..n}^d; when none is, their product (degree
    <= 3n in each variable) has a nonzero point on {0..3n}^d.
    """
    basis = tuple(twisted_centralizer_basis(M))
    n = M.rows
    d = len(basis)
    if d == 0:
        return QDecision(SPEC_INF_ONLY, basis, certificate="centralizer space trivial")
    I = Matrix.identity(n)
    factors = (
        ("det(N)", lambda N: det(N)),
        ("det(Id-N)", lambda N: det(I - N)),
        ("det(Id-MN)", lambda N: det(I - M @ N)),
    )
    for name, f in factors:
        if not any(f(combine(basis, c)) != 0 for c in shell_grid(d, n)):
            return QDecision(
                SPEC_INF_ONLY, basis,
                certificate=f"{name} vanishes identically on the centralizer "
                            f"(zero on the grid {{0..{n}}}^{d})")
    for c in shell_grid(d, 3 * n):
        N = combine(basis, c)
        if all(f(N) != 0 for _, f in factors):
            return QDecision(SPEC_TWO_AND_INF, basis, N, c,
                             certificate="witness on the evaluation grid")
    raise AssertionError("nonzero polynomial vanished on its full evaluation grid")
