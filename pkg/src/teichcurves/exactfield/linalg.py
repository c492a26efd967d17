"""Exact dense matrices over a field.

Elimination always pivots on the first nonzero entry found scanning the
current column downward, so ranks, kernels and particular solutions are
reproducible bit for bit.
"""

from __future__ import annotations

from typing import Any, Callable, Iterable, Sequence

from ..errors import NoSolutionError
from .fields import QQ, Field


class Matrix:
    __slots__ = ("rows", "nrows", "ncols", "field")

    def __init__(self, rows: Iterable[Sequence[Any]], field: Field = QQ,
                 ncols: int | None = None) -> None:
        self.rows = [[field(x) for x in row] for row in rows]
        self.field = field
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def _wrap(cls, rows: list[list[Any]], field: Field, ncols: int | None = None) -> Matrix:
        m = cls.__new__(cls)
        m.rows = rows
        m.field = field
        m.nrows = len(rows)
        m.ncols = len(rows[0]) if rows else (ncols or 0)
        return m

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> Matrix:
        return cls._wrap([[field.one if i == j else field.zero for j in range(n)]
                          for i in range(n)], field)

    @classmethod
    def zeros(cls, r: int, c: int, field: Field = QQ) -> Matrix:
        return cls._wrap([[field.zero] * c for _ in range(r)], field, c)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Any]], field: Field = QQ) -> Matrix:
        if not cols:
            return cls._wrap([], field)
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))], field)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Any:
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> list[Any]:
        return list(self.rows[i])

    def column(self, j: int) -> list[Any]:
        return [r[j] for r in self.rows]

    def transpose(self) -> Matrix:
        return Matrix._wrap([list(c) for c in zip(*self.rows)], self.field, self.nrows) \
            if self.rows else Matrix._wrap([], self.field)

    T = property(transpose)

    def map(self, fn: Callable[[Any], Any], field: Field | None = None) -> Matrix:
        fld = field or self.field
        return Matrix._wrap([[fn(x) for x in r] for r in self.rows], fld, self.ncols)

    def __mul__(self, other: Any) -> Matrix:
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} x {other.shape}")
            cols = list(zip(*other.rows))
            zero = self.field.zero
            out = []
            for r in self.rows:
                new = []
                for c in cols:
                    acc = zero
                    for x, y in zip(r, c):
                        if x and y:
                            acc = acc + x * y
                    new.append(acc)
                out.append(new)
            return Matrix._wrap(out, self.field, other.ncols)
        c = self.field(other)
        return self.map(lambda x: x * c)

    def __rmul__(self, other: Any) -> Matrix:
        return self * other

    def apply(self, v: Sequence[Any]) -> list[Any]:
        zero = self.field.zero
        out = []
        for r in self.rows:
            acc = zero
            for x, y in zip(r, v):
                acc = acc + x * y
            out.append(acc)
        return out

    def __add__(self, other: Matrix) -> Matrix:
        return Matrix._wrap([[x + y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)],
                            self.field, self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        return Matrix._wrap([[x - y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)],
                            self.field, self.ncols)

    def __neg__(self) -> Matrix:
        return self.map(lambda x: -x)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(tuple(tuple(r) for r in self.rows))

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def hstack(self, other: Matrix) -> Matrix:
        return Matrix._wrap([a + b for a, b in zip(self.rows, other.rows)], self.field,
                            self.ncols + other.ncols)

    def __repr__(self) -> str:
        return "Matrix([" + ",\n        ".join(repr(r) for r in self.rows) + "])"

    # elimination ---------------------------------------------------------------
    def rref(self) -> tuple[Matrix, list[int]]:
        """Reduced row echelon form and the pivot columns."""
        rows = [list(r) for r in self.rows]
        one = self.field.one
        pivots: list[int] = []
        prow = 0
        for col in range(self.ncols):
            if prow >= self.nrows:
                break
            sel = next((i for i in range(prow, self.nrows) if rows[i][col]), None)
            if sel is None:
                continue
            rows[prow], rows[sel] = rows[sel], rows[prow]
            piv = rows[prow]
            inv = one / piv[col]
            piv = [x * inv if x else x for x in piv]
            rows[prow] = piv
            for i in range(self.nrows):
                if i != prow and rows[i][col]:
                    c = rows[i][col]
                    rows[i] = [x - c * y if y else x for x, y in zip(rows[i], piv)]
            pivots.append(col)
            prow += 1
        return Matrix._wrap(rows, self.field, self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[list[Any]]:
        """Basis of the right kernel, one vector per free column (free entry = 1)."""
        red, pivots = self.rref()
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = []
        zero, one = self.field.zero, self.field.one
        for fcol in free:
            v = [zero] * self.ncols
            v[fcol] = one
            for i, pcol in enumerate(pivots):
                v[pcol] = -red.rows[i][fcol]
            basis.append(v)
        return basis

    def left_nullspace(self) -> list[list[Any]]:
        return self.transpose().nullspace()

    def solve(self, B: Matrix) -> Matrix:
        """One solution X of self * X = B, free variables set to zero."""
        if B.nrows != self.nrows:
            raise ValueError("row count mismatch")
        aug = self.hstack(B)
        red, pivots = aug.rref()
        n = self.ncols
        if any(p >= n for p in pivots):
            raise NoSolutionError("no solution")
        zero = self.field.zero
        X = [[zero] * B.ncols for _ in range(n)]
        for i, pcol in enumerate(pivots):
            for k in range(B.ncols):
                X[pcol][k] = red.rows[i][n + k]
        return Matrix._wrap(X, self.field, B.ncols)

    def det(self) -> Any:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        rows = [list(r) for r in self.rows]
        n = self.nrows
        result = self.field.one
        for col in range(n):
            sel = next((i for i in range(col, n) if rows[i][col]), None)
            if sel is None:
                return self.field.zero
            if sel != col:
                rows[col], rows[sel] = rows[sel], rows[col]
                result = -result
            piv = rows[col]
            result = result * piv[col]
            inv = self.field.one / piv[col]
            for i in range(col + 1, n):
                if rows[i][col]:
                    c = rows[i][col] * inv
                    rows[i] = [x - c * y if y else x for x, y in zip(rows[i], piv)]
        return result

    def inverse(self) -> Matrix:
        return self.solve(Matrix.identity(self.nrows, self.field))


def bareiss_det(rows: Sequence[Sequence[Any]], one: Any = 1) -> Any:
    """Fraction-free determinant over an integral domain with exact division
    (integers, or polynomials via ``exact_div``)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            sel = next((i for i in range(k + 1, n) if m[i][k]), None)
            if sel is None:
                return m[0][0] * 0
            m[k], m[sel] = m[sel], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = _exact(num, prev)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d


def _exact(num: Any, den: Any) -> Any:
    if isinstance(num, int) and isinstance(den, int):
        q, r = divmod(num, den)
        if r:
            raise ArithmeticError("inexact Bareiss division")
        return q
    if hasattr(num, "exact_div"):
        return num.exact_div(den)
    return num / den


def nullspace(A: Matrix) -> list[list[Any]]:
    return A.nullspace()


def solve_linear(A: Matrix, B: Matrix) -> Matrix:
    return A.solve(B)
