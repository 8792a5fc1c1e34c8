"""Cardinality of the cokernel of a square map A^n -> A^n.

Two independent routes over Z[1/p]: the determinant formula (prime-to-p
part of det) and a replay through integer Smith normal form after clearing
p-denominators. They must agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import total_ordering

from .matrices import Matrix, clear_p_denominators, det, smith_normal_form
from .rings import RingDesc, format_rational, is_member, prime_to_p_part, z_localized

__all__ = [
    "ExtNat", "INF", "coker_card_formula", "coker_card_oracle",
    "coker_card_Z_bruteforce",
]


@total_ordering
@dataclass(frozen=True)
class ExtNat:
    """A positive natural number or infinity (``value is None``)."""

    value: int | None

    def __post_init__(self):
        if self.value is not None:
            if isinstance(self.value, bool) or not isinstance(self.value, int):
                raise TypeError("ExtNat wraps an int")
            if self.value < 1:
                raise ValueError(f"cardinality must be >= 1, got {self.value}")

    @classmethod
    def of(cls, k: int) -> "ExtNat":
        return cls(k)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __add__(self, other: "ExtNat") -> "ExtNat":
        if not isinstance(other, ExtNat):
            return NotImplemented
        if self.value is None or other.value is None:
            return INF
        return ExtNat(self.value + other.value)

    def __lt__(self, other: "ExtNat") -> bool:
        if not isinstance(other, ExtNat):
            return NotImplemented
        if self.value is None:
            return False
        return other.value is None or self.value < other.value

    def __str__(self):
        return "inf" if self.value is None else str(self.value)

    @classmethod
    def parse(cls, text: str) -> "ExtNat":
        text = text.strip()
        return INF if text == "inf" else cls(int(text))


INF = ExtNat(None)


def _check_square(m: Matrix):
    if not m.is_square:
        raise ValueError("cokernel cardinality needs a square matrix")


def coker_card_formula(m: Matrix, ring: RingDesc) -> ExtNat:
    """|coker| from the determinant alone: 1 over Q, prime-to-p part over Z[1/p], |det| over Z."""
    _check_square(m)
    if not m.is_over(ring):
        bad = next(x for x in m.entries if not is_member(x, ring))
        raise ValueError(f"entry {format_rational(bad)} is not in {ring}")
    d = det(m)
    if d == 0:
        return INF
    if ring.kind == RingDesc.RATIONALS:
        return ExtNat(1)
    if ring.kind == RingDesc.INTEGERS:
        return ExtNat(abs(d.numerator))
    return ExtNat(prime_to_p_part(d, ring.p))


def coker_card_oracle(m: Matrix, p: int) -> ExtNat:
    """|coker| over Z[1/p] via p**l scaling, integer Smith form, and dropping p-torsion."""
    _check_square(m)
    z_localized(p)  # validates p
    m1, _ = clear_p_denominators(m, p)
    order = 1
    for d in smith_normal_form(m1).diagonal:
        if d == 0:
            return INF
        while d % p == 0:
            d //= p
        order *= d
    return ExtNat(order)


def coker_card_Z_bruteforce(m: Matrix, modulus: int) -> int:
    """|coker| of an integer matrix acting on (Z/modulus)^n, by enumerating the image."""
    _check_square(m)
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if not m.is_integral():
        raise ValueError("brute-force cokernel needs an integer matrix")
    n = m.rows
    rows = [[int(x) % modulus for x in m.row(i)] for i in range(n)]
    image = set()
    for v in itertools.product(range(modulus), repeat=n):
        image.add(tuple(sum(r[j] * v[j] for j in range(n)) % modulus for r in rows))
    return modulus ** n // len(image)
