"""Exact linear algebra over the rationals.

Rank uses fraction-free Bareiss elimination on an integer-scaled copy of
the matrix, which keeps intermediate entries polynomially bounded instead
of letting naive Gaussian elimination blow up numerators and denominators.
Solving and inversion use straight Gauss-Jordan over Fraction, which is
fine at the matrix sizes this engine meets (Hom spaces of dimension <= a
few hundred).

rank_of_sparse_rows exists for the large, very sparse action matrices of
symmetric-group idempotents; it eliminates dict-backed rows and picks
pivots on the shortest row to limit fill-in.  It must always agree with
RationalMatrix.rank, and the tests enforce that on random matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


class RationalMatrix:
    """Dense matrix of Fractions with exact operations."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, data: Sequence[Sequence[object]]):
        rows = [[Fraction(x) for x in row] for row in data]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        self.data = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0

    @staticmethod
    def zero(nrows: int, ncols: int) -> "RationalMatrix":
        return RationalMatrix([[0] * ncols for _ in range(nrows)])

    @staticmethod
    def identity(n: int) -> "RationalMatrix":
        return RationalMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def from_columns(columns: Sequence[Sequence[object]]) -> "RationalMatrix":
        if not columns:
            return RationalMatrix([])
        return RationalMatrix(
            [[columns[j][i] for j in range(len(columns))] for i in range(len(columns[0]))]
        )

    def column(self, j: int) -> list[Fraction]:
        return [row[j] for row in self.data]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.data == other.data
        )

    def __mul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        out = []
        bt = other.transpose().data
        for row in self.data:
            out.append([sum(a * b for a, b in zip(row, col)) for col in bt])
        return RationalMatrix(out)

    def apply(self, vector: Sequence[object]) -> list[Fraction]:
        vec = [Fraction(x) for x in vector]
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return [sum(a * b for a, b in zip(row, vec)) for row in self.data]

    def is_idempotent(self) -> bool:
        return self.nrows == self.ncols and self * self == self

    def trace(self) -> Fraction:
        return sum(self.data[i][i] for i in range(min(self.nrows, self.ncols)))

    # -- rank ------------------------------------------------------------------

    def rank(self) -> int:
        """Exact rank via fraction-free Bareiss elimination."""
        if self.nrows == 0 or self.ncols == 0:
            return 0
        # Clear denominators row by row; scaling a row never changes rank.
        m: list[list[int]] = []
        for row in self.data:
            scale = 1
            for x in row:
                scale = scale * x.denominator // gcd(scale, x.denominator)
            m.append([int(x * scale) for x in row])
        nrows, ncols = self.nrows, self.ncols
        rank = 0
        prev = 1
        col = 0
        while rank < nrows and col < ncols:
            pivot_row = None
            for i in range(rank, nrows):
                if m[i][col]:
                    pivot_row = i
                    break
            if pivot_row is None:
                col += 1
                continue
            m[rank], m[pivot_row] = m[pivot_row], m[rank]
            pivot = m[rank][col]
            for i in range(rank + 1, nrows):
                head = m[i][col]
                row_i, row_p = m[i], m[rank]
                # Full Bareiss update; the division by the previous pivot is exact.
                for j in range(col, ncols):
                    row_i[j] = (row_i[j] * pivot - head * row_p[j]) // prev
            prev = pivot
            rank += 1
            col += 1
        return rank

    # -- solving ---------------------------------------------------------------

    def _rref(self, augment: list[list[Fraction]]):
        """Gauss-Jordan on [self | augment]; returns (rows, pivots)."""
        work = [list(row) + list(aug) for row, aug in zip(self.data, augment)]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            pivot_row = None
            for i in range(r, self.nrows):
                if work[i][c] != 0:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            work[r], work[pivot_row] = work[pivot_row], work[r]
            inv = Fraction(1) / work[r][c]
            work[r] = [x * inv for x in work[r]]
            for i in range(self.nrows):
                if i != r and work[i][c] != 0:
                    f = work[i][c]
                    work[i] = [x - f * y for x, y in zip(work[i], work[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return work, pivots

    def solve(self, rhs: Sequence[object]) -> list[Fraction] | None:
        """One exact solution of self * x = rhs, or None if inconsistent."""
        b = [[Fraction(x)] for x in rhs]
        if len(b) != self.nrows:
            raise ValueError("right-hand side has wrong length")
        work, pivots = self._rref(b)
        for i in range(len(pivots), self.nrows):
            if work[i][self.ncols] != 0:
                return None
        x = [Fraction(0)] * self.ncols
        for r, c in enumerate(pivots):
            x[c] = work[r][self.ncols]
        return x

    def inverse(self) -> "RationalMatrix":
        if self.nrows != self.ncols:
            raise ValueError("only square matrices can be inverted")
        aug = RationalMatrix.identity(self.nrows).data
        work, pivots = self._rref(aug)
        if len(pivots) != self.nrows:
            raise ValueError("matrix is singular")
        n = self.nrows
        return RationalMatrix([row[n:] for row in work])

    def __repr__(self) -> str:
        return f"RationalMatrix({self.nrows}x{self.ncols})"


def rank_of_sparse_rows(rows: list[dict[int, Fraction]]) -> int:
    """Exact rank of a matrix given as sparse rows (column -> coefficient).

    Structural elimination: repeatedly pick the shortest remaining row,
    use its first column as pivot, and eliminate that column from every
    other row.  Exact over Fraction; efficient when rows stay short.
    """
    work = [dict(r) for r in rows if r]
    rank = 0
    while work:
        work.sort(key=len)
        pivot_row = work.pop(0)
        rank += 1
        col = min(pivot_row)
        inv = Fraction(1) / pivot_row[col]
        pivot_row = {c: v * inv for c, v in pivot_row.items()}
        remaining = []
        for row in work:
            f = row.get(col)
            if f:
                for c, v in pivot_row.items():
                    s = row.get(c, Fraction(0)) - f * v
                    if s == 0:
                        row.pop(c, None)
                    else:
                        row[c] = s
            if row:
                remaining.append(row)
        work = remaining
    return rank
