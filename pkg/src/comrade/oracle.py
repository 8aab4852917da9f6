"""Dense reference implementations used to cross-check the fast path.

Deliberately boring: textbook Gaussian elimination and Gauss-Jordan over
Fractions with first-nonzero pivoting and no structure exploitation, so
a bug in the banded recurrences cannot hide here.  Eliminations whose
factor is already zero are skipped, which keeps these usable up to a few
hundred rows on banded inputs; tests stay well inside that.
"""

from __future__ import annotations

from fractions import Fraction

from .matrix import DenseMatrix, SingularMatrixError


def _working_copy(M: DenseMatrix, augment_identity: bool):
    n = M.n
    rows = []
    for i in range(n):
        row = [v if isinstance(v, Fraction) else Fraction(v) for v in M.rows[i]]
        if augment_identity:
            row += [Fraction(1 if j == i else 0) for j in range(n)]
        rows.append(row)
    return rows


def dense_det(M: DenseMatrix) -> Fraction:
    """Determinant by elimination with row swaps; singular gives exactly 0."""
    a = _working_copy(M, augment_identity=False)
    n = M.n
    sign = 1
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            sign = -sign
        pivot = a[col][col]
        det *= pivot
        for r in range(col + 1, n):
            factor = a[r][col]
            if factor == 0:
                continue
            factor /= pivot
            for c in range(col, n):
                a[r][c] -= factor * a[col][c]
    return det if sign > 0 else -det


def dense_invert(M: DenseMatrix) -> DenseMatrix:
    """Inverse by Gauss-Jordan on [M | I]; raises SingularMatrixError."""
    a = _working_copy(M, augment_identity=True)
    n = M.n
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError()
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
        pivot = a[col][col]
        if pivot != 1:
            inv = 1 / pivot
            a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r == col:
                continue
            factor = a[r][col]
            if factor == 0:
                continue
            a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return DenseMatrix(n, tuple(tuple(row[n:]) for row in a))
