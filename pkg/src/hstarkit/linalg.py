"""Exact dense integer linear algebra on small matrices.

Everything runs over Python's arbitrary-precision integers and
``fractions.Fraction``; no floating point is used anywhere. The normal-form
routines pick minimal-absolute-value pivots to limit entry growth, and
determinants use fraction-free Bareiss elimination.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatchError, InternalCheckError, SingularMatrixError


@dataclass(frozen=True)
class IntMatrix:
    """Immutable row-major integer matrix."""

    rows: tuple[tuple[int, ...], ...]
    ncols_hint: int = 0  # disambiguates the column count of 0-row matrices

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        tup = tuple(tuple(int(x) for x in row) for row in rows)
        widths = {len(r) for r in tup}
        if len(widths) > 1:
            raise DimensionMismatchError("ragged rows")
        width = widths.pop() if widths else (ncols or 0)
        if ncols is not None and tup and width != ncols:
            raise DimensionMismatchError("ncols does not match row width")
        return cls(tup, width)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else self.ncols_hint

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(
            (self.column(j) for j in range(self.ncols)), ncols=self.nrows
        )

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatchError("matmul shape mismatch")
        cols = [other.column(j) for j in range(other.ncols)]
        return IntMatrix.from_rows(
            (
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            ),
            ncols=other.ncols,
        )

    def mul_vector(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.ncols:
            raise DimensionMismatchError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.rows)


@dataclass(frozen=True)
class SmithDecomposition:
    """Unimodular U, W and diagonal D with U @ M @ W == D."""

    U: IntMatrix
    W: IntMatrix
    D: IntMatrix

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.D.diagonal()


def _row_sub(a: list[list[int]], u: list[list[int]], i: int, k: int, q: int) -> None:
    # row_i -= q * row_k, mirrored on the transform
    if q == 0:
        return
    ai, ak = a[i], a[k]
    for j in range(len(ai)):
        ai[j] -= q * ak[j]
    ui, uk = u[i], u[k]
    for j in range(len(ui)):
        ui[j] -= q * uk[j]


def hermite_normal_form(matrix: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-operation Hermite normal form H = U @ M, U unimodular.

    Pivots are assigned bottom-up while sweeping columns right to left, so a
    square nonsingular input comes out lower triangular with positive
    diagonal and below-diagonal entries reduced to [0, pivot). Rows that end
    up zero (rank-deficient input) collect at the top; the matching rows of U
    form a basis of the left kernel.
    """
    m, n = matrix.nrows, matrix.ncols
    a = [list(row) for row in matrix.rows]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    pivot_row = m - 1
    for col in range(n - 1, -1, -1):
        if pivot_row < 0:
            break
        if not any(a[i][col] for i in range(pivot_row + 1)):
            continue
        while True:
            nonzero = [i for i in range(pivot_row + 1) if a[i][col]]
            best = min(nonzero, key=lambda i: abs(a[i][col]))
            if best != pivot_row:
                a[best], a[pivot_row] = a[pivot_row], a[best]
                u[best], u[pivot_row] = u[pivot_row], u[best]
            if a[pivot_row][col] < 0:
                a[pivot_row] = [-x for x in a[pivot_row]]
                u[pivot_row] = [-x for x in u[pivot_row]]
            pivot = a[pivot_row][col]
            cleared = True
            for i in range(pivot_row):
                if a[i][col]:
                    _row_sub(a, u, i, pivot_row, a[i][col] // pivot)
                    if a[i][col]:
                        cleared = False
            if cleared:
                break
        pivot = a[pivot_row][col]
        for i in range(pivot_row + 1, m):
            _row_sub(a, u, i, pivot_row, a[i][col] // pivot)
        pivot_row -= 1
    return (
        IntMatrix.from_rows(a, ncols=n),
        IntMatrix.from_rows(u, ncols=m),
    )


def left_kernel(matrix: IntMatrix) -> IntMatrix:
    """Basis (as rows) of {x integer : x @ M == 0}; saturated by construction."""
    h, u = hermite_normal_form(matrix)
    rows = [u.rows[i] for i in range(matrix.nrows) if not any(h.rows[i])]
    return IntMatrix.from_rows(rows, ncols=matrix.nrows)


def _min_abs_entry(a: list[list[int]], t: int, n: int) -> tuple[int, int] | None:
    best = None
    best_abs = 0
    for i in range(t, n):
        for j in range(t, n):
            v = a[i][j]
            if v and (best is None or abs(v) < best_abs):
                best, best_abs = (i, j), abs(v)
                if best_abs == 1:
                    return best
    return best


def smith_normal_form(matrix: IntMatrix) -> SmithDecomposition:
    """Smith normal form of a square nonsingular integer matrix.

    Raises SingularMatrixError when det M == 0; otherwise returns U, W, D
    with U @ M @ W == D, diagonal entries positive and each dividing the
    next.
    """
    if not matrix.is_square:
        raise DimensionMismatchError("Smith normal form requires a square matrix")
    n = matrix.nrows
    a = [list(row) for row in matrix.rows]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    wt = [[int(i == j) for j in range(n)] for i in range(n)]  # rows are columns of W

    def col_sub(j: int, k: int, q: int) -> None:
        if q == 0:
            return
        for i in range(n):
            a[i][j] -= q * a[i][k]
        wj, wk = wt[j], wt[k]
        for i in range(n):
            wj[i] -= q * wk[i]

    def col_swap(j: int, k: int) -> None:
        for i in range(n):
            a[i][j], a[i][k] = a[i][k], a[i][j]
        wt[j], wt[k] = wt[k], wt[j]

    for t in range(n):
        loc = _min_abs_entry(a, t, n)
        if loc is None:
            raise SingularMatrixError("matrix is singular")
        i0, j0 = loc
        if i0 != t:
            a[i0], a[t] = a[t], a[i0]
            u[i0], u[t] = u[t], u[i0]
        if j0 != t:
            col_swap(j0, t)
        while True:
            # Euclid steps until column t below and row t right are zero.
            col_nonzero = [i for i in range(t + 1, n) if a[i][t]]
            if col_nonzero:
                for i in col_nonzero:
                    _row_sub(a, u, i, t, a[i][t] // a[t][t])
                rem = [i for i in range(t + 1, n) if a[i][t]]
                if rem:
                    i = min(rem, key=lambda r: abs(a[r][t]))
                    a[i], a[t] = a[t], a[i]
                    u[i], u[t] = u[t], u[i]
                continue
            row_nonzero = [j for j in range(t + 1, n) if a[t][j]]
            if row_nonzero:
                for j in row_nonzero:
                    col_sub(j, t, a[t][j] // a[t][t])
                rem = [j for j in range(t + 1, n) if a[t][j]]
                if rem:
                    j = min(rem, key=lambda c: abs(a[t][c]))
                    col_swap(j, t)
                continue
            pivot = a[t][t]
            if pivot == 0:
                raise SingularMatrixError("matrix is singular")
            viol = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if a[i][j] % pivot:
                        viol = i
                        break
                if viol is not None:
                    break
            if viol is None:
                break
            # Fold the offending row into row t so the pivot can shrink to
            # the gcd on the next sweep.
            for j in range(n):
                a[t][j] += a[viol][j]
            for j in range(n):
                u[t][j] += u[viol][j]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return SmithDecomposition(
        U=IntMatrix.from_rows(u, ncols=n),
        W=IntMatrix.from_rows(wt, ncols=n).transpose(),
        D=IntMatrix.from_rows(a, ncols=n),
    )


def det(matrix: IntMatrix) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    if not matrix.is_square:
        raise DimensionMismatchError("determinant requires a square matrix")
    n = matrix.nrows
    if n == 0:
        return 1
    a = [list(row) for row in matrix.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(matrix: IntMatrix) -> int:
    """Rank over the rationals (exact)."""
    a = [[Fraction(x) for x in row] for row in matrix.rows]
    m, n = matrix.nrows, matrix.ncols
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return r


def _solve_columns(
    matrix: IntMatrix, columns: Sequence[Sequence[int | Fraction]]
) -> list[tuple[Fraction, ...]]:
    """Exact solutions of M x = b for several right-hand sides at once."""
    if not matrix.is_square:
        raise DimensionMismatchError("solve requires a square matrix")
    n = matrix.nrows
    k = len(columns)
    for b in columns:
        if len(b) != n:
            raise DimensionMismatchError("right-hand side length mismatch")
    aug = [
        [Fraction(matrix.rows[i][j]) for j in range(n)]
        + [Fraction(columns[c][i]) for c in range(k)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [tuple(aug[i][n + c] for i in range(n)) for c in range(k)]


def solve_rational(matrix: IntMatrix, b: Sequence[int]) -> tuple[Fraction, ...]:
    """Exact x with M x = b; raises SingularMatrixError when det M == 0."""
    return _solve_columns(matrix, [list(b)])[0]


def inverse_rational(matrix: IntMatrix) -> list[tuple[Fraction, ...]]:
    """Rows of M^-1 as exact rationals."""
    n = matrix.nrows
    cols = _solve_columns(
        matrix, [[int(i == j) for i in range(n)] for j in range(n)]
    )
    # _solve_columns returns inverse columns; transpose into rows.
    return [tuple(cols[j][i] for j in range(n)) for i in range(n)]


def adjugate(matrix: IntMatrix) -> tuple[IntMatrix, int]:
    """(adj M, det M) with adj M = det(M) * M^-1, entries exactly integral."""
    d = det(matrix)
    if d == 0:
        raise SingularMatrixError("adjugate of a singular matrix is not supported")
    inv = inverse_rational(matrix)
    rows = []
    for row in inv:
        out = []
        for x in row:
            v = x * d
            if v.denominator != 1:  # pragma: no cover - impossible by Cramer
                raise InternalCheckError("adjugate entry not integral")
            out.append(int(v))
        rows.append(out)
    return IntMatrix.from_rows(rows, ncols=matrix.ncols), d
