"""Small exact square matrices over the rationals.

The lower-triangular subtype carries the Toeplitz inversion routines; the
determinants are computed fraction-free."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .qcore import RationalLike, as_rational


class SingularToeplitz(ZeroDivisionError):
    """Triangular Toeplitz matrix with zero diagonal."""


class Matrix:
    """Immutable square matrix of Fractions."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[RationalLike]]):
        rs = tuple(tuple(as_rational(x) for x in r) for r in rows)
        n = len(rs)
        if any(len(r) != n for r in rs):
            raise ValueError("matrix must be square")
        self.rows: tuple[tuple[Fraction, ...], ...] = rs

    @classmethod
    def from_function(cls, n: int, f: Callable[[int, int], RationalLike]):
        return cls([[f(i, j) for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, n: int):
        return cls.from_function(n, lambda i, j: 1 if i == j else 0)

    @classmethod
    def diagonal(cls, values: Sequence[RationalLike]):
        values = list(values)
        return cls.from_function(len(values), lambda i, j: values[i] if i == j else 0)

    @classmethod
    def shift(cls, n: int):
        """The superdiagonal shift: ones at ``(i, i+1)``."""
        return cls.from_function(n, lambda i, j: 1 if j == i + 1 else 0)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"{type(self).__name__}([{body}])"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            out.append([sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols])
        result = Matrix(out)
        if isinstance(self, TriMatrix) and isinstance(other, TriMatrix):
            return TriMatrix(result.rows)
        return result

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def crop(self, n: int) -> "Matrix":
        """Leading principal ``n x n`` block."""
        return type(self)([r[:n] for r in self.rows[:n]])

    def is_lower_triangular(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.n) for j in range(i + 1, self.n))

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.n)

    def apply(self, vec):
        """Matrix times a column of values supporting ``+`` and scalar ``*``
        (Fractions or polynomials)."""
        out = []
        for r in self.rows:
            acc = None
            for a, v in zip(r, vec):
                if a:
                    term = v * a
                    acc = term if acc is None else acc + term
            out.append(acc if acc is not None else vec[0] * 0)
        return out


class TriMatrix(Matrix):
    """Lower-triangular square matrix; construction rejects anything above
    the diagonal."""

    __slots__ = ()

    def __init__(self, rows):
        super().__init__(rows)
        if not self.is_lower_triangular():
            raise ValueError("entries above the diagonal must be zero")

    def inverse(self) -> "TriMatrix":
        """Forward substitution, column by column."""
        n = self.n
        inv = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            d = self.rows[i][i]
            if d == 0:
                raise ZeroDivisionError("singular triangular matrix")
            inv[i][i] = 1 / d
            for j in range(i):
                s = sum((self.rows[i][k] * inv[k][j] for k in range(j, i)), Fraction(0))
                inv[i][j] = -s / d
        return TriMatrix(inv)


def det_bareiss(rows: Sequence[Sequence[RationalLike]]) -> Fraction:
    """Exact determinant by Bareiss fraction-free elimination with row
    pivoting.  Works over Fractions since every division is exact."""
    m = [[as_rational(x) for x in r] for r in rows]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def toeplitz(seq: Sequence[RationalLike], n: int) -> TriMatrix:
    """Lower-triangular Toeplitz matrix with ``t[i][j] = seq[i-j]``."""
    seq = [as_rational(x) for x in seq]
    if len(seq) < n:
        raise ValueError("sequence too short for the requested size")
    return TriMatrix.from_function(n, lambda i, j: seq[i - j] if i >= j else 0)


def toeplitz_symbol(T: Matrix) -> list[Fraction]:
    """First column of a Toeplitz matrix, after checking it really is one."""
    n = T.n
    col = [T[i, 0] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if T[i, j] != (col[i - j] if i >= j else 0):
                raise ValueError("matrix is not lower-triangular Toeplitz")
    return col


def toeplitz_inverse_substitution(T: Matrix) -> TriMatrix:
    a = toeplitz_symbol(T)
    if a[0] == 0:
        raise SingularToeplitz("zero diagonal")
    b = [1 / a[0]]
    for m in range(1, T.n):
        b.append(-sum((a[k] * b[m - k] for k in range(1, m + 1)), Fraction(0)) / a[0])
    return toeplitz(b, T.n)


def toeplitz_inverse_cramer(T: Matrix) -> TriMatrix:
    """Inverse symbol from determinants of the lower Hessenberg matrices
    ``[[a1, a0, 0, ...], [a2, a1, a0, ...], ..., [an, ..., a1]]``:
    ``b_n = (-1)^n det / a0^(n+1)``."""
    a = toeplitz_symbol(T)
    if a[0] == 0:
        raise SingularToeplitz("zero diagonal")
    b = []
    for m in range(T.n):
        if m == 0:
            b.append(1 / a[0])
            continue
        H = [[a[i - j + 1] if i - j + 1 >= 0 else Fraction(0) for j in range(m)] for i in range(m)]
        b.append((-1) ** m * det_bareiss(H) / a[0] ** (m + 1))
    return toeplitz(b, T.n)
