"""Dense exact matrices over Q (and its subrings) with integer Smith normal form."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Sequence

from .rings import (
    RationalLike, RingDesc, as_rational, format_rational, is_member, is_unit,
    parse_rational, z_localized,
)

__all__ = [
    "Matrix", "SmithDecomposition", "det", "is_invertible_over",
    "smith_normal_form", "clear_p_denominators", "nullspace", "parse_matrix",
    "parse_vector", "format_vector", "format_matrix",
]


class Matrix:
    """Immutable row-major matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable[RationalLike]):
        entries = tuple(x if type(x) is Fraction else as_rational(x) for x in entries)
        if rows < 1 or cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    def __reduce__(self):
        return (Matrix, (self.rows, self.cols, self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged or empty row list")
        return cls(len(rows), len(rows[0]), [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return _identity(n)

    @classmethod
    def _build_identity(cls, n: int) -> "Matrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence[RationalLike]) -> "Matrix":
        n = len(values)
        return cls(n, n, [values[i] if i == j else 0 for i in range(n) for j in range(n)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.rows, self.cols, self.entries)))
        return self._hash

    def __repr__(self):
        return f"Matrix({format_matrix(self)!r})"

    def __str__(self):
        return format_matrix(self)

    def _check_same_shape(self, other: "Matrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c: RationalLike) -> "Matrix":
        c = as_rational(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        n, m, k = self.rows, other.cols, self.cols
        a, b = self.entries, other.entries
        if n == m == k == 2:
            return Matrix(2, 2, (a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                                 a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]))
        out = []
        for i in range(n):
            ai = a[i * k:(i + 1) * k]
            for j in range(m):
                out.append(sum(ai[t] * b[t * m + j] for t in range(k)))
        return Matrix(n, m, out)

    def apply(self, vec: Sequence[RationalLike]) -> tuple[Fraction, ...]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        v = [as_rational(x) for x in vec]
        return tuple(sum(self[i, j] * v[j] for j in range(self.cols)) for i in range(self.rows))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.entries)

    def is_over(self, ring: RingDesc) -> bool:
        return all(is_member(x, ring) for x in self.entries)

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def inverse(self) -> "Matrix":
        """Inverse over Q by Gauss-Jordan."""
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for c in range(n):
            piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = 1 / aug[c][c]
            aug[c] = [x * inv for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c] != 0:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return Matrix(n, n, [x for r in aug for x in r[n:]])

    def power(self, e: int) -> "Matrix":
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        base = self if e >= 0 else self.inverse()
        result = Matrix.identity(self.rows)
        for _ in range(abs(e)):
            result = result @ base
        return result


def _bareiss(a: list[list[int]]) -> int:
    """Fraction-free elimination on a square integer matrix (mutated)."""
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact: Sylvester's identity guarantees divisibility
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


@lru_cache(maxsize=32)
def _identity(n: int) -> Matrix:
    return Matrix._build_identity(n)


def det(m: Matrix) -> Fraction:
    """Exact determinant: clear denominators, then Bareiss over Z."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 1:
        return m.entries[0]
    if n == 2:
        a, b, c, d = m.entries
        return a * d - b * c
    lcm = 1
    for x in m.entries:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    rows = [[int(x * lcm) for x in m.row(i)] for i in range(n)]
    return Fraction(_bareiss(rows), lcm ** n)


def is_invertible_over(m: Matrix, ring: RingDesc) -> bool:
    return is_unit(det(m), ring)


def nullspace(m: Matrix) -> list[tuple[Fraction, ...]]:
    """Basis of {x : m x = 0} over Q from the reduced row echelon form.

    One vector per free column, in increasing column order; the free
    coordinate is 1 and the other free coordinates are 0.
    """
    rows = m.to_rows()
    ncols = m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ M @ V == D with U, V unimodular and d1 | d2 | ... on the diagonal of D."""

    D: Matrix
    U: Matrix
    V: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        k = min(self.D.rows, self.D.cols)
        return tuple(int(self.D[i, i]) for i in range(k))


def _swap_rows(a, i, j):
    a[i], a[j] = a[j], a[i]


def _swap_cols(a, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(m: Matrix) -> SmithDecomposition:
    """Smith normal form of an integer matrix with explicit transforms.

    Pivot choice is always the entry of smallest nonzero absolute value in
    the remaining block (first in row-major order on ties), so output is
    deterministic.
    """
    if not m.is_integral():
        raise ValueError("smith_normal_form needs integer entries")
    nr, nc = m.rows, m.cols
    a = [[int(x) for x in m.row(i)] for i in range(nr)]
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    # V is tracked transposed: column ops on a are row ops on vt
    vt = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def row_op(dst, src, q):
        # row dst -= q * row src
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def col_op(dst, src, q):
        for row in a:
            row[dst] -= q * row[src]
        vt[dst] = [x - q * y for x, y in zip(vt[dst], vt[src])]

    for t in range(min(nr, nc)):
        while True:
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    x = a[i][j]
                    if x != 0 and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                _swap_rows(a, t, pi)
                _swap_rows(u, t, pi)
            if pj != t:
                _swap_cols(a, t, pj)
                _swap_rows(vt, t, pj)
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    row_op(i, t, a[i][t] // piv)
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, nc):
                if a[t][j]:
                    col_op(j, t, a[t][j] // piv)
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(t + 1, nr)
                        if any(a[i][j] % piv for j in range(t + 1, nc))), None)
            if bad is None:
                break
            # pull an entry not divisible by the pivot into row t and retry
            row_op(t, bad, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    D = Matrix(nr, nc, [x for r in a for x in r])
    U = Matrix(nr, nr, [x for r in u for x in r])
    V = Matrix(nc, nc, [x for r in vt for x in r]).transpose()
    return SmithDecomposition(D, U, V)


def clear_p_denominators(m: Matrix, p: int) -> tuple[Matrix, int]:
    """Smallest l >= 0 with p**l * m integral, and that integral matrix."""
    ring = z_localized(p)
    l = 0
    for x in m.entries:
        if not is_member(x, ring):
            raise ValueError(f"entry {format_rational(x)} is not in {ring}")
        d, e = x.denominator, 0
        while d % p == 0:
            d //= p
            e += 1
        l = max(l, e)
    return m.scale(p ** l), l


def parse_matrix(text: str) -> Matrix:
    """``"1,-1;1,-4"``: rows split on ';', entries on ','."""
    if not text.strip():
        raise ValueError("empty matrix text")
    rows = text.strip().split(";")
    parsed = [[parse_rational(x) for x in r.split(",")] for r in rows]
    if any(len(r) != len(parsed[0]) for r in parsed):
        raise ValueError(f"ragged matrix text {text!r}")
    return Matrix.from_rows(parsed)


def format_matrix(m: Matrix) -> str:
    return ";".join(",".join(format_rational(x) for x in m.row(i)) for i in range(m.rows))


def parse_vector(text: str) -> tuple[Fraction, ...]:
    if not text.strip():
        raise ValueError("empty vector text")
    return tuple(parse_rational(x) for x in text.split(","))


def format_vector(v: Sequence[Fraction]) -> str:
    return ",".join(format_rational(as_rational(x)) for x in v)

