"""Exact linear algebra over the rationals and over prime fields.

Every homology computation in this package reduces to ranks, kernels and
exact solves of boundary matrices.  The matrices are small and dense at
the scales we target, so plain Gauss-Jordan elimination over exact field
elements is used throughout.  There is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class RationalField:
    """The field of rationals; elements are fractions.Fraction."""

    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def of_int(n: int) -> Fraction:
        return Fraction(n)

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


@dataclass(frozen=True)
class GFElement:
    """Residue class modulo a prime, with field operations."""

    p: int
    value: int

    def __add__(self, other: "GFElement") -> "GFElement":
        return GFElement(self.p, (self.value + other.value) % self.p)

    def __sub__(self, other: "GFElement") -> "GFElement":
        return GFElement(self.p, (self.value - other.value) % self.p)

    def __mul__(self, other: "GFElement") -> "GFElement":
        return GFElement(self.p, (self.value * other.value) % self.p)

    def __truediv__(self, other: "GFElement") -> "GFElement":
        if other.value == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return GFElement(self.p, self.value * pow(other.value, -1, self.p) % self.p)

    def __neg__(self) -> "GFElement":
        return GFElement(self.p, -self.value % self.p)

    def __bool__(self) -> bool:
        return self.value != 0


class PrimeField:
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = GFElement(p, 0)
        self.one = GFElement(p, 1)

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    def of_int(self, n: int) -> GFElement:
        return GFElement(self.p, n % self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return self.name


class Matrix:
    """Dense matrix over an exact field, row major."""

    def __init__(self, field, rows: int, cols: int, data=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        if data is None:
            data = [[field.zero] * cols for _ in range(rows)]
        self.data = data

    @classmethod
    def from_rows(cls, field, rows_data) -> "Matrix":
        rows_data = [list(r) for r in rows_data]
        cols = len(rows_data[0]) if rows_data else 0
        if any(len(r) != cols for r in rows_data):
            raise ValueError("ragged rows")
        return cls(field, len(rows_data), cols, rows_data)

    @classmethod
    def from_int_rows(cls, field, rows_data) -> "Matrix":
        return cls.from_rows(field, [[field.of_int(x) for x in r] for r in rows_data])

    @classmethod
    def from_columns(cls, field, nrows: int, columns) -> "Matrix":
        columns = [list(c) for c in columns]
        data = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
        return cls(field, nrows, len(columns), data)

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        m = cls(field, n, n)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, [row[:] for row in self.data])

    def column(self, j: int) -> list:
        return [self.data[i][j] for i in range(self.rows)]

    def row_submatrix(self, row_indices) -> "Matrix":
        return Matrix(self.field, len(row_indices), self.cols,
                      [self.data[i][:] for i in row_indices])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        zero = self.field.zero
        out = Matrix(self.field, self.rows, other.cols)
        for i in range(self.rows):
            row = self.data[i]
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    if row[k]:
                        acc = acc + row[k] * other.data[k][j]
                out.data[i][j] = acc
        return out

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.field, self.rows, self.cols,
                      [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.field, self.rows, self.cols,
                      [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)])

    def scale(self, c) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols,
                      [[c * x for x in row] for row in self.data])

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        m = self.copy()
        pivots = []
        r = 0
        for c in range(m.cols):
            pr = None
            for i in range(r, m.rows):
                if m.data[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            m.data[r], m.data[pr] = m.data[pr], m.data[r]
            pv = m.data[r][c]
            m.data[r] = [x / pv for x in m.data[r]]
            for i in range(m.rows):
                if i != r and m.data[i][c]:
                    f = m.data[i][c]
                    m.data[i] = [x - f * y for x, y in zip(m.data[i], m.data[r])]
            pivots.append(c)
            r += 1
            if r == m.rows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[list]:
        return [v for _, v in self.kernel_basis_with_pivots()]

    def kernel_basis_with_pivots(self) -> list[tuple[int, list]]:
        """Echelon-normalized kernel basis, one vector per free column.

        Returns (free column, vector) pairs; the vector is 1 at its free
        column and 0 at every other free column.
        """
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for f in free:
            v = [self.field.zero] * self.cols
            v[f] = self.field.one
            for r, pc in enumerate(pivots):
                v[pc] = -red.data[r][f]
            basis.append((f, v))
        return basis

    def solve(self, rhs: "Matrix") -> "Matrix":
        """Solve self @ X = rhs exactly; raises ValueError if inconsistent."""
        if rhs.rows != self.rows:
            raise ValueError("rhs row count mismatch")
        aug = Matrix(self.field, self.rows, self.cols + rhs.cols,
                     [self.data[i][:] + rhs.data[i][:] for i in range(self.rows)])
        red, pivots = aug.rref()
        for c in pivots:
            if c >= self.cols:
                raise ValueError("inconsistent linear system")
        x = Matrix(self.field, self.cols, rhs.cols)
        for r, pc in enumerate(pivots):
            for j in range(rhs.cols):
                x.data[pc][j] = red.data[r][self.cols + j]
        return x

    def __repr__(self) -> str:
        return f"Matrix({self.field.name}, {self.rows}x{self.cols})"


def rank_kernel(a: Matrix) -> tuple[int, list[list]]:
    """Exact rank and an echelon-normalized kernel basis."""
    red, pivots = a.rref()
    return len(pivots), a.kernel_basis()


def restricted_kernel(a: Matrix, forbidden_rows) -> list[list]:
    """Basis of {v : (Av)_r = 0 for every r in forbidden_rows}.

    With no forbidden rows this is the whole domain; with all rows it is
    the kernel of A.
    """
    rows = sorted(set(forbidden_rows))
    if any(r < 0 or r >= a.rows for r in rows):
        raise ValueError("forbidden row index out of range")
    if not rows:
        return [list(col) for col in Matrix.identity(a.field, a.cols).data]
    return a.row_submatrix(rows).kernel_basis()


def span_rank(field, vectors) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    return Matrix.from_rows(field, vectors).rank()


def same_span(field, vecs_a, vecs_b) -> bool:
    vecs_a, vecs_b = list(vecs_a), list(vecs_b)
    ra = span_rank(field, vecs_a)
    rb = span_rank(field, vecs_b)
    if ra != rb:
        return False
    return span_rank(field, vecs_a + vecs_b) == ra


def in_span(field, basis_vectors, v) -> bool:
    basis_vectors = list(basis_vectors)
    r = span_rank(field, basis_vectors)
    return span_rank(field, basis_vectors + [list(v)]) == r
