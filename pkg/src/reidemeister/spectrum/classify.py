"""Sort theta(1) into the shapes for which closed-form spectra are known."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..groups import GroupDesc
from ..matrices import Matrix
from ..rings import RingDesc

__all__ = ["ThetaCase", "classify_theta", "SCALAR", "DIAG", "ANTIDIAG", "IDENTITY", "GENERAL"]

SCALAR = "SCALAR"
DIAG = "DIAG"
ANTIDIAG = "ANTIDIAG"
IDENTITY = "IDENTITY"
GENERAL = "GENERAL"


@dataclass(frozen=True)
class ThetaCase:
    kind: str
    sub: str = ""
    params: tuple[Fraction, ...] = ()
    clause: str | None = None

    def __str__(self):
        args = ",".join(str(x) for x in self.params)
        head = f"{self.kind}({args})" if args else self.kind
        if self.sub:
            head += f" case {self.sub}"
        return head


def _is_antidiagonal_2x2(M: Matrix) -> bool:
    return M.rows == 2 and M[0, 0] == 0 and M[1, 1] == 0


def _scalar_clause(ring: RingDesc, r: Fraction) -> tuple[str, str]:
    sub = "plus" if r == 1 else "minus" if r == -1 else "other"
    if ring.kind == RingDesc.RATIONALS:
        return sub, "P3.1a[r=+-1]" if sub != "other" else "P3.1a[r!=+-1]"
    prop = "P3.1c" if ring.p == 2 else "P3.1b"
    tag = {"plus": "r=1", "minus": "r=-1", "other": "other"}[sub]
    return sub, f"{prop}[{tag}]"


def _diag_clause(ring: RingDesc, r: Fraction, s: Fraction) -> tuple[str, str | None]:
    if ring.kind == RingDesc.RATIONALS:
        if r * s not in (0, 1) and (r * r != 1 or s * s != 1):
            return "EX1", "EX1"
        if r * r != 1 and r * s == 1:
            return "EX2", "EX2"
        return "", None
    prop = "P3.5" if ring.p == 2 else "P3.7"
    if abs(r) == 1 and abs(s) == 1:
        if r == s:
            return "a", f"{prop}a[r=s={int(r)}]"
        return "b", f"{prop}b"
    if r * s == 1:
        return "c", f"{prop}c"
    return "d", f"{prop}d"


def _antidiag_clause(ring: RingDesc, u: Fraction, v: Fraction) -> tuple[str, str | None]:
    uv = u * v
    if ring.kind == RingDesc.RATIONALS:
        if abs(uv) != 1:
            return "EX3a", "EX3[|uv|!=1]"
        if u == 1 and v == 1:
            return "EX3b", "EX3[u=v=1]"
        return "", None
    prop = "P3.6" if ring.p == 2 else "P3.8"
    if uv == 1:
        return "a", f"{prop}a"
    if uv == -1:
        return "b", f"{prop}b"
    return "c", f"{prop}c"


def classify_theta(group: GroupDesc) -> ThetaCase:
    M, ring, n = group.theta, group.ring, group.n
    if n == 1:
        r = M[0, 0]
        sub, clause = _scalar_clause(ring, r)
        return ThetaCase(SCALAR, sub, (r,), clause)
    if n == 2 and M.is_diagonal():
        r, s = M[0, 0], M[1, 1]
        sub, clause = _diag_clause(ring, r, s)
        return ThetaCase(DIAG, sub, (r, s), clause)
    if _is_antidiagonal_2x2(M):
        u, v = M[0, 1], M[1, 0]
        sub, clause = _antidiag_clause(ring, u, v)
        return ThetaCase(ANTIDIAG, sub, (u, v), clause)
    if M == Matrix.identity(n) or M == -Matrix.identity(n):
        return ThetaCase(IDENTITY, "plus" if M[0, 0] == 1 else "minus", (M[0, 0],))
    return ThetaCase(GENERAL)
