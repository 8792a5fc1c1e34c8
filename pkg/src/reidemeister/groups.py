"""Groups A^n x|_theta Z, their automorphisms, and Reidemeister numbers.

An automorphism is stored as the triple (N, eps, z): N is its restriction
to the kernel A^n (which every automorphism preserves), eps = +-1 is the
induced map on the quotient Z, and z is the kernel part of the image of the
Z generator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cokernel import INF, ExtNat, coker_card_formula
from .matrices import Matrix, is_invertible_over
from .rings import RingDesc, as_rational, is_member

__all__ = [
    "GroupDesc", "AutoDesc", "ReidemeisterResult", "IncompatibleAutomorphism",
    "check_automorphism", "reidemeister_abelian", "reidemeister_semidirect",
    "reidemeister_cyclic_endo", "brute_force_cyclic",
]


class IncompatibleAutomorphism(ValueError):
    """(N, eps) does not define an automorphism of the given group."""


@dataclass(frozen=True)
class GroupDesc:
    ring: RingDesc
    theta: Matrix
    label: str = ""

    def __post_init__(self):
        if self.ring.kind == RingDesc.INTEGERS:
            raise ValueError("kernel ring must be Q or Z[1/p]")
        if not self.theta.is_square:
            raise ValueError("theta(1) must be square")
        if not self.theta.is_over(self.ring):
            raise ValueError(f"theta(1) has entries outside {self.ring}")
        if not is_invertible_over(self.theta, self.ring):
            raise ValueError(f"theta(1) is not invertible over {self.ring}")

    @property
    def n(self) -> int:
        return self.theta.rows


@dataclass(frozen=True)
class AutoDesc:
    N: Matrix
    eps: int
    z: tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        if not self.N.is_square:
            raise ValueError("N must be square")
        z = tuple(as_rational(x) for x in self.z) or (Fraction(0),) * self.N.rows
        if len(z) != self.N.rows:
            raise ValueError("z has the wrong length")
        object.__setattr__(self, "z", z)


@dataclass(frozen=True)
class ReidemeisterResult:
    total: ExtNat
    parts: tuple[ExtNat, ExtNat] | None = None

    def __str__(self):
        if self.parts is None:
            return str(self.total)
        return f"{self.total} (= {self.parts[0]} + {self.parts[1]})"


def check_automorphism(group: GroupDesc, auto: AutoDesc) -> bool:
    """True iff N is invertible over the ring and N M = M^eps N."""
    if auto.N.rows != group.n:
        raise ValueError(f"N is {auto.N.rows}x{auto.N.rows} but the kernel has rank {group.n}")
    ring = group.ring
    if not auto.N.is_over(ring) or not all(is_member(x, ring) for x in auto.z):
        return False
    if not is_invertible_over(auto.N, ring):
        return False
    M = group.theta
    if _is_plus_or_minus_identity(M):
        return True
    if auto.eps == 1:
        return auto.N @ M == M @ auto.N
    # N M = M^-1 N  <=>  M N M = N
    return M @ auto.N @ M == auto.N


def _is_plus_or_minus_identity(M: Matrix) -> bool:
    c = M[0, 0]
    return c * c == 1 and M == Matrix.identity(M.rows).scale(c)


def reidemeister_abelian(N: Matrix, ring: RingDesc) -> ExtNat:
    """Number of twisted classes of N acting on ring^n: |coker(Id - N)|."""
    return coker_card_formula(Matrix.identity(N.rows) - N, ring)


def reidemeister_semidirect(group: GroupDesc, auto: AutoDesc) -> ReidemeisterResult:
    """R(phi) for phi = (N, eps, z); independent of z.

    eps = +1 gives infinity outright. For eps = -1 the count is
    R(N) + R(M N) on the kernel.
    """
    if not check_automorphism(group, auto):
        raise IncompatibleAutomorphism("incompatible (N, eps) for this theta")
    return semidirect_unchecked(group, auto)


def semidirect_unchecked(group: GroupDesc, auto: AutoDesc) -> ReidemeisterResult:
    """reidemeister_semidirect for an automorphism the caller has already checked."""
    if auto.eps == 1:
        return ReidemeisterResult(INF)
    left = reidemeister_abelian(auto.N, group.ring)
    right = reidemeister_abelian(group.theta @ auto.N, group.ring)
    return ReidemeisterResult(left + right, (left, right))


def reidemeister_cyclic_endo(m: int, d: int) -> int:
    """Classes of x -> d x on Z/m: gcd(|1 - d|, m), with gcd(0, m) = m."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    return math.gcd(abs(1 - d), m)


def brute_force_cyclic(m: int, d: int) -> int:
    """Count classes of x ~ x + g - d g on Z/m with a union-find sweep."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(m):
        for g in range(m):
            a, b = find(x), find((x + g - d * g) % m)
            if a != b:
                parent[a] = b
    return len({find(x) for x in range(m)})

