"""Exact rational scalars and small dense rational matrices.

Scalars are :class:`fractions.Fraction`, which already keeps every value in
reduced form with a positive denominator. Matrix routines clear denominators
row by row and then run Bareiss fraction-free elimination on plain integers,
so no gcd work happens inside the elimination loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import MatrixShapeError, SingularMatrixError

Rational = Fraction

__all__ = [
    "Rational",
    "RationalMatrix",
    "as_rational",
    "format_rational",
    "parse_rational",
    "determinant_exact",
    "solve_exact",
    "solve_many_exact",
    "inverse_exact",
]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact values")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    """Return ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise MatrixShapeError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise MatrixShapeError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise MatrixShapeError("ragged rows")
        return cls(len(rows), cols, tuple(as_rational(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def delete(self, indices: Iterable[int]) -> "RationalMatrix":
        """Remove the given rows and the same-numbered columns (a principal minor)."""
        if not self.is_square:
            raise MatrixShapeError("principal minors need a square matrix")
        drop = set(indices)
        keep = [i for i in range(self.rows) if i not in drop]
        return RationalMatrix.from_rows(
            [[self[i, j] for j in keep] for i in keep], cols=len(keep)
        )

    def matvec(self, x: Sequence) -> list[Fraction]:
        if len(x) != self.cols:
            raise MatrixShapeError("vector length does not match column count")
        return [sum((a * b for a, b in zip(self.row(i), x)), Fraction(0)) for i in range(self.rows)]

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.entries)


def _integer_rows(m: RationalMatrix, rhs: Sequence[Sequence[Fraction]] = ()):
    """Scale each row (and the matching rhs entries) to integers.

    Returns the integer augmented rows and the product of the scale factors.
    """
    out = []
    scale_product = 1
    for i in range(m.rows):
        row = list(m.row(i)) + [as_rational(col[i]) for col in rhs]
        s = lcm(*(x.denominator for x in row)) if row else 1
        scale_product *= s
        out.append([x.numerator * (s // x.denominator) for x in row])
    return out, scale_product


def _bareiss_forward(a: list[list[int]], n: int) -> tuple[int, int]:
    """In-place fraction-free forward elimination on the first ``n`` columns.

    Returns (sign, last pivot); the determinant of the leading n x n block
    equals sign * last pivot. Raises SingularMatrixError on a zero pivot column.
    """
    sign = 1
    prev = 1
    width = len(a[0]) if a else 0
    for k in range(n):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                raise SingularMatrixError(f"no pivot in column {k}")
        pk = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, width):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (pk * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign, prev


def determinant_exact(m: RationalMatrix) -> Fraction:
    if not m.is_square:
        raise MatrixShapeError(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    a, scale = _integer_rows(m)
    try:
        sign, last = _bareiss_forward(a, n)
    except SingularMatrixError:
        return Fraction(0)
    return Fraction(sign * last, scale)


def solve_many_exact(m: RationalMatrix, rhs: Sequence[Sequence]) -> list[list[Fraction]]:
    """Solve ``m x = b`` for each right-hand side ``b`` in ``rhs``.

    One elimination serves all right-hand sides. Fraction-free back
    substitution keeps ``det * x`` integral until the final division.
    """
    if not m.is_square:
        raise MatrixShapeError(f"cannot solve with a {m.rows}x{m.cols} matrix")
    n = m.rows
    k = len(rhs)
    for b in rhs:
        if len(b) != n:
            raise MatrixShapeError("right-hand side length does not match matrix")
    if n == 0:
        return [[] for _ in range(k)]
    a, _ = _integer_rows(m, rhs)
    original = [row[:] for row in a]
    _bareiss_forward(a, n)
    d = a[n - 1][n - 1]
    solutions = []
    for c in range(n, n + k):
        y = [0] * n
        for i in range(n - 1, -1, -1):
            s = d * a[i][c]
            row = a[i]
            for j in range(i + 1, n):
                s -= row[j] * y[j]
            y[i] = s // row[i]
        # residual check on the scaled integer system: A' y == d b'
        for row in original:
            if sum(row[j] * y[j] for j in range(n)) != d * row[c]:
                raise ArithmeticError("exact back-substitution check failed")
        solutions.append([Fraction(v, d) for v in y])
    return solutions


def solve_exact(m: RationalMatrix, b: Sequence) -> list[Fraction]:
    return solve_many_exact(m, [b])[0]


def inverse_exact(m: RationalMatrix) -> RationalMatrix:
    n = m.rows
    cols = solve_many_exact(m, [[int(i == j) for i in range(n)] for j in range(n)])
    return RationalMatrix.from_rows([[cols[j][i] for j in range(n)] for i in range(n)], cols=n)
