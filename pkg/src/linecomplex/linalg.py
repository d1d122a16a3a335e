"""Exact integer/rational linear algebra for small matrices.

Everything here is exact: Bareiss fraction-free elimination on integers for
rank and determinant, and Gauss-Jordan over ``Fraction`` for solving and for
null spaces.  No floating point is involved anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .geometry import Complex, incidence_submatrix

MAX_DET_DIM = 12
MAX_RANK_DIM = 32

Matrix = Sequence[Sequence[int]]


class ShapeError(ValueError):
    pass


def _shape(m: Matrix) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    for row in m:
        if len(row) != cols:
            raise ShapeError("ragged matrix")
    return rows, cols


def _bareiss(m: Matrix) -> tuple[int, int]:
    """Fraction-free row echelon form.

    Returns ``(rank, signed_last_pivot)``.  For a square nonsingular input the
    second value is the determinant; otherwise it is meaningless.  Pivot-free
    columns are skipped, which keeps every intermediate an exact minor.
    """
    a = [[int(x) for x in row] for row in m]
    rows, cols = _shape(a)
    sign = 1
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
            sign = -sign
        piv = a[r][c]
        for i in range(r + 1, rows):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, cols):
                ai[j] = (piv * ai[j] - f * a[r][j]) // prev
            ai[c] = 0
        prev = piv
        r += 1
    return r, sign * prev


def determinant_exact(m: Matrix) -> int:
    rows, cols = _shape(m)
    if rows != cols:
        raise ShapeError(f"determinant needs a square matrix, got {rows}x{cols}")
    if rows > MAX_DET_DIM:
        raise ShapeError(f"determinant limited to {MAX_DET_DIM}x{MAX_DET_DIM}")
    if rows == 0:
        return 1
    rank, last = _bareiss(m)
    return last if rank == rows else 0


def rank_exact(m: Matrix) -> int:
    rows, cols = _shape(m)
    if rows > MAX_RANK_DIM or cols > MAX_RANK_DIM:
        raise ShapeError(f"rank limited to {MAX_RANK_DIM}x{MAX_RANK_DIM}")
    if rows == 0 or cols == 0:
        return 0
    return _bareiss(m)[0]


def is_admissible_rank(c: Complex) -> bool:
    return determinant_exact(incidence_submatrix(c)) != 0


def _rref(m: Sequence[Sequence], rhs: Sequence | None = None):
    """Reduced row echelon form over the rationals.

    Returns ``(rows, pivot_columns)``; with ``rhs`` the augmented column is
    carried as the last entry of each row.
    """
    a = [[Fraction(x) for x in row] for row in m]
    if rhs is not None:
        for row, b in zip(a, rhs):
            row.append(Fraction(b))
    nrows = len(a)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


class SingularSystemError(ValueError):
    pass


def solve_exact(m: Matrix, b: Sequence) -> list[Fraction]:
    """Unique solution of ``m x = b`` for square nonsingular ``m``."""
    rows, cols = _shape(m)
    if rows != cols or len(b) != rows:
        raise ShapeError("solve_exact needs a square system")
    a, pivots = _rref(m, b)
    if len(pivots) < cols:
        raise SingularSystemError("matrix is singular")
    return [a[i][-1] for i in range(cols)]


def nullspace_exact(m: Matrix) -> list[list[Fraction]]:
    """Basis of {x : m x = 0}, one vector per free column (that entry set to 1)."""
    _, cols = _shape(m)
    a, pivots = _rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, pc in zip(a, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis
