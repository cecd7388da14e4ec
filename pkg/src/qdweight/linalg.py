"""Dense exact linear algebra over a field context.

Everything downstream (relation checking, endomorphism solving, idempotent
splitting, intertwiner search) reduces to small dense systems, so this stays
deliberately simple: Gauss-Jordan with exact arithmetic, no pivot strategy
beyond first-nonzero.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .fields import Fel, FieldCtx


class Mat:
    """An immutable-by-convention dense matrix of field elements."""

    __slots__ = ("ctx", "rows", "cols", "data")

    def __init__(self, ctx: FieldCtx, data: Sequence[Sequence[Fel]], cols: Optional[int] = None):
        self.ctx = ctx
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        if self.rows:
            self.cols = len(self.data[0])
            for row in self.data:
                if len(row) != self.cols:
                    raise ValueError("ragged matrix")
        else:
            self.cols = cols if cols is not None else 0

    # construction helpers

    @staticmethod
    def zeros(ctx: FieldCtx, rows: int, cols: int) -> "Mat":
        return Mat(ctx, [[ctx.zero] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(ctx: FieldCtx, n: int) -> "Mat":
        out = Mat.zeros(ctx, n, n)
        for i in range(n):
            out.data[i][i] = ctx.one
        return out

    @staticmethod
    def from_ints(ctx: FieldCtx, rows: Sequence[Sequence[int]]) -> "Mat":
        return Mat(ctx, [[ctx.from_int(v) for v in row] for row in rows])

    @staticmethod
    def column(ctx: FieldCtx, entries: Sequence[Fel]) -> "Mat":
        return Mat(ctx, [[e] for e in entries], cols=1)

    def copy(self) -> "Mat":
        return Mat(self.ctx, self.data, cols=self.cols)

    # basic algebra

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __add__(self, other: "Mat") -> "Mat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        return Mat(
            self.ctx,
            [
                [self.data[i][j] + other.data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ],
            cols=self.cols,
        )

    def __sub__(self, other: "Mat") -> "Mat":
        return self + other.scale(-self.ctx.one)

    def scale(self, c: Fel) -> "Mat":
        return Mat(self.ctx, [[v * c for v in row] for row in self.data], cols=self.cols)

    def __mul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        zero = self.ctx.zero
        out = []
        for i in range(self.rows):
            row = []
            a = self.data[i]
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    if a[k]:
                        acc = acc + a[k] * other.data[k][j]
                row.append(acc)
            out.append(row)
        return Mat(self.ctx, out, cols=other.cols)

    def pow(self, n: int) -> "Mat":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        acc = Mat.identity(self.ctx, self.rows)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def transpose(self) -> "Mat":
        return Mat(
            self.ctx,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def hstack(self, other: "Mat") -> "Mat":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return Mat(
            self.ctx,
            [self.data[i] + other.data[i] for i in range(self.rows)],
            cols=self.cols + other.cols,
        )

    def col(self, j: int) -> List[Fel]:
        return [self.data[i][j] for i in range(self.rows)]

    def is_zero(self) -> bool:
        return all(not v for row in self.data for v in row)

    def __repr__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"Mat({self.rows}x{self.cols})"
        body = "; ".join(" ".join(str(v) for v in row) for row in self.data)
        return f"Mat[{body}]"

    # elimination

    def rref(self) -> Tuple["Mat", List[int]]:
        """Reduced row echelon form and the pivot column indices."""
        m = self.copy()
        pivots: List[int] = []
        r = 0
        for c in range(m.cols):
            pivot_row = None
            for i in range(r, m.rows):
                if m.data[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            m.data[r], m.data[pivot_row] = m.data[pivot_row], m.data[r]
            inv = m.data[r][c].inverse()
            m.data[r] = [v * inv for v in m.data[r]]
            for i in range(m.rows):
                if i != r and m.data[i][c]:
                    factor = m.data[i][c]
                    m.data[i] = [
                        m.data[i][j] - factor * m.data[r][j] for j in range(m.cols)
                    ]
            pivots.append(c)
            r += 1
            if r == m.rows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> List["Mat"]:
        """Basis of the right kernel, as column vectors."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for f in free:
            vec = [self.ctx.zero] * self.cols
            vec[f] = self.ctx.one
            for r, p in enumerate(pivots):
                vec[p] = -red.data[r][f]
            basis.append(Mat.column(self.ctx, vec))
        return basis

    def column_space(self) -> "Mat":
        """A matrix whose columns are a basis of the column space."""
        _, pivots = self.rref()
        cols = [[self.data[i][j] for j in pivots] for i in range(self.rows)]
        return Mat(self.ctx, cols, cols=len(pivots))

    def solve(self, rhs: "Mat") -> Optional["Mat"]:
        """One exact solution X of self * X = rhs, or None if inconsistent.

        Free variables are set to zero.
        """
        if rhs.rows != self.rows:
            raise ValueError("rhs row mismatch")
        aug = self.hstack(rhs)
        red, pivots = aug.rref()
        n = self.cols
        for r, p in enumerate(pivots):
            if p >= n:
                return None  # a pivot escaped into the rhs block
        out = Mat.zeros(self.ctx, n, rhs.cols)
        for r, p in enumerate(pivots):
            for j in range(rhs.cols):
                out.data[p][j] = red.data[r][n + j]
        return out

    def inverse(self) -> Optional["Mat"]:
        if self.rows != self.cols:
            return None
        sol = self.solve(Mat.identity(self.ctx, self.rows))
        if sol is None:
            return None
        if (self * sol) != Mat.identity(self.ctx, self.rows):
            return None
        return sol

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    # serialization

    def to_json(self) -> list:
        return [[str(v) for v in row] for row in self.data]

    @staticmethod
    def from_json(ctx: FieldCtx, data: list, rows: int, cols: int) -> "Mat":
        if len(data) != rows or any(len(row) != cols for row in data):
            raise ValueError(f"matrix shape mismatch: expected {rows}x{cols}")
        return Mat(ctx, [[ctx.parse(v) for v in row] for row in data], cols=cols)


def fitting_power(m: Mat) -> Mat:
    """m raised to its dimension: high enough that kernel and image split."""
    return m.pow(max(m.rows, 1))
