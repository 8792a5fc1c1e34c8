"""Exact scalars over Q and its subrings Z[1/p] and Z.

Scalars are ``fractions.Fraction`` values, which are always kept in lowest
terms with a positive denominator (zero is 0/1).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

__all__ = [
    "Rational", "RingDesc", "Q", "Z", "z_localized", "UnitDecomposition",
    "as_rational", "parse_rational", "format_rational", "is_prime",
    "is_member", "prime_to_p_part", "split_p_power", "is_unit", "unit_log",
    "unit_value",
]

_RATIONAL_RE = re.compile(r"^([+-]?)(\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``[sign]digits[/digits]``; anything else (decimals, blanks) is rejected."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"bad rational literal {text!r}")
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    value = Fraction(int(num), int(den) if den is not None else 1)
    return -value if sign == "-" else value


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class RingDesc:
    """One of Q, Z[1/p] (``kind == "p_local"``) or Z."""

    kind: str
    p: int | None = None

    RATIONALS = "rationals"
    P_LOCAL = "p_local"
    INTEGERS = "integers"

    def __post_init__(self):
        if self.kind == self.P_LOCAL:
            if not isinstance(self.p, int) or not is_prime(self.p):
                raise ValueError(f"Z[1/p] needs a prime p, got {self.p!r}")
        elif self.kind in (self.RATIONALS, self.INTEGERS):
            if self.p is not None:
                raise ValueError(f"{self.kind} takes no prime")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    def __str__(self):
        if self.kind == self.RATIONALS:
            return "Q"
        if self.kind == self.INTEGERS:
            return "Z"
        return f"Z[1/{self.p}]"

    @classmethod
    def parse(cls, text: str) -> "RingDesc":
        s = text.strip().replace(" ", "")
        if s in ("Q", "QQ"):
            return Q
        if s in ("Z", "ZZ"):
            return Z
        m = re.match(r"^Z\[1/(\d+)\]$", s)
        if m is None:
            raise ValueError(f"unknown ring {text!r} (expected Q, Z or Z[1/p])")
        return z_localized(int(m.group(1)))


Q = RingDesc(RingDesc.RATIONALS)
Z = RingDesc(RingDesc.INTEGERS)


def z_localized(p: int) -> RingDesc:
    return RingDesc(RingDesc.P_LOCAL, p)


def _strip(n: int, p: int) -> tuple[int, int]:
    """Return (e, m) with n = p**e * m and p not dividing m (n != 0)."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e, n


def split_p_power(x: RationalLike, p: int) -> tuple[int, Fraction]:
    """Write nonzero x as p**e * u where u has no factor p in numerator or denominator."""
    x = as_rational(x)
    if x == 0:
        raise ValueError("valuation undefined at zero")
    en, num = _strip(x.numerator, p)
    ed, den = _strip(x.denominator, p)
    return en - ed, Fraction(num, den)


def is_member(x: RationalLike, ring: RingDesc) -> bool:
    x = as_rational(x)
    if ring.kind == RingDesc.RATIONALS:
        return True
    if ring.kind == RingDesc.INTEGERS:
        return x.denominator == 1
    return _strip(x.denominator, ring.p)[1] == 1


def prime_to_p_part(x: RationalLike, p: int) -> int:
    """The positive q with x = +-q * p**n, q coprime to p.

    Defined on all of Q with a nonzero value whose prime-to-p part is an
    integer, i.e. x in Z[1/p]. A denominator with a factor other than p is
    an error since q would not be a natural number.
    """
    _, u = split_p_power(x, p)
    if u.denominator != 1:
        raise ValueError(f"{format_rational(as_rational(x))} is not in Z[1/{p}]")
    return abs(u.numerator)


def is_unit(x: RationalLike, ring: RingDesc) -> bool:
    x = as_rational(x)
    if x == 0:
        return False
    if ring.kind == RingDesc.RATIONALS:
        return True
    if ring.kind == RingDesc.INTEGERS:
        return x in (1, -1)
    return is_member(x, ring) and prime_to_p_part(x, ring.p) == 1


class UnitDecomposition(NamedTuple):
    sign: int
    exponent: int


def unit_log(x: RationalLike, p: int) -> UnitDecomposition:
    """Decompose a unit of Z[1/p] as sign * p**exponent."""
    x = as_rational(x)
    if not is_unit(x, z_localized(p)):
        raise ValueError(f"{format_rational(x)} is not a unit of Z[1/{p}]")
    e, u = split_p_power(x, p)
    return UnitDecomposition(1 if u > 0 else -1, e)


def unit_value(sign: int, exponent: int, p: int) -> Fraction:
    return sign * Fraction(p) ** exponent
