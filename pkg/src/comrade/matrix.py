"""Comrade-matrix data model, dense conversion, and test-family generators.

A comrade matrix is tridiagonal except for a dense last row:

    [ beta_1  alpha_1                                  ]
    [ gamma_2 beta_2   alpha_2                         ]
    [         gamma_3  beta_3   alpha_3                ]
    [                  ...      ...      ...           ]
    [ a_n     a_{n-1}  ...      a_3      gamma_n beta_n]

The compact form stores the four entry families as O(n) tuples; dense
position (n, j), 1-based, holds a_{n-j+1} for j = 1..n-2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction


class SingularMatrixError(ArithmeticError):
    """Inversion was asked for a matrix whose determinant is exactly zero."""

    def __init__(self):
        super().__init__("matrix is singular")


@dataclass(frozen=True)
class ComradeMatrix:
    """Compact form of an n x n comrade matrix (n >= 3).

    beta   diagonal (beta_1 .. beta_n), length n
    alpha  superdiagonal (alpha_1 .. alpha_{n-1}), length n-1
    gamma  subdiagonal plus the (n, n-1) entry (gamma_2 .. gamma_n),
           length n-1
    a      extra last-row coefficients in increasing subscript order
           (a_3 .. a_n), length n-2

    Entries are any field scalars.  Data matrices hold Fractions; the
    symbolic solver builds working copies holding RationalFunctions.
    """

    n: int
    beta: tuple
    alpha: tuple
    gamma: tuple
    a: tuple

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"comrade matrix needs n >= 3, got n = {self.n}")
        for name, want in (("beta", self.n), ("alpha", self.n - 1),
                           ("gamma", self.n - 1), ("a", self.n - 2)):
            got = len(getattr(self, name))
            if got != want:
                raise ValueError(f"{name} must have {want} entries for n = {self.n}, got {got}")


def make_comrade(n, beta, alpha, gamma, a) -> ComradeMatrix:
    """Build a ComradeMatrix from any rational-convertible entries."""
    as_fractions = lambda seq: tuple(v if isinstance(v, Fraction) else Fraction(v) for v in seq)
    return ComradeMatrix(n, as_fractions(beta), as_fractions(alpha),
                         as_fractions(gamma), as_fractions(a))


@dataclass(frozen=True)
class DenseMatrix:
    """Row-major n x n matrix of field scalars."""

    n: int
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise ValueError(f"dense matrix must be {self.n} x {self.n}")

    @classmethod
    def from_rows(cls, rows) -> "DenseMatrix":
        return cls(len(rows), tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "DenseMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls(n, tuple(tuple(one if i == j else zero for j in range(n))
                            for i in range(n)))

    def __getitem__(self, i):
        return self.rows[i]

    def matmul(self, other: "DenseMatrix") -> "DenseMatrix":
        n = self.n
        out = []
        for i in range(n):
            row = self.rows[i]
            out.append(tuple(sum(row[k] * other.rows[k][j] for k in range(n))
                             for j in range(n)))
        return DenseMatrix(n, tuple(out))

    def __sub__(self, other: "DenseMatrix"):
        return DenseMatrix(self.n, tuple(
            tuple(x - y for x, y in zip(r, s))
            for r, s in zip(self.rows, other.rows)))

    def inf_norm(self):
        """Induced infinity norm: max absolute row sum."""
        return max(sum(abs(x) for x in row) for row in self.rows)

    def as_floats(self) -> "DenseMatrix":
        return DenseMatrix(self.n, tuple(tuple(float(x) for x in row)
                                         for row in self.rows))


def to_dense(C: ComradeMatrix) -> DenseMatrix:
    """Expand the compact form; structural zeros become Fraction(0)."""
    n = C.n
    zero = Fraction(0)
    rows = []
    for i in range(n - 1):  # 1-based rows 1..n-1: band only
        row = [zero] * n
        if i > 0:
            row[i - 1] = C.gamma[i - 1]  # gamma_{i+1}
        row[i] = C.beta[i]
        row[i + 1] = C.alpha[i]
        rows.append(tuple(row))
    last = [zero] * n
    for j0 in range(n - 2):              # (n, j) holds a_{n-j+1}
        last[j0] = C.a[n - 3 - j0]
    last[n - 2] = C.gamma[n - 2]         # gamma_n
    last[n - 1] = C.beta[n - 1]
    rows.append(tuple(last))
    return DenseMatrix(n, tuple(rows))


def comrade_times_dense(C: ComradeMatrix, M: DenseMatrix) -> DenseMatrix:
    """C*M in O(n^2) using the band-plus-last-row structure."""
    if C.n != M.n:
        raise ValueError("size mismatch")
    n = C.n
    rows = []
    for i in range(n - 1):
        acc = [C.beta[i] * v for v in M.rows[i]]
        above = M.rows[i + 1]
        for j in range(n):
            acc[j] += C.alpha[i] * above[j]
        if i > 0:
            below = M.rows[i - 1]
            g = C.gamma[i - 1]
            for j in range(n):
                acc[j] += g * below[j]
        rows.append(tuple(acc))
    acc = [C.beta[n - 1] * v for v in M.rows[n - 1]]
    g = C.gamma[n - 2]
    for j in range(n):
        acc[j] += g * M.rows[n - 2][j]
    for j0 in range(n - 2):
        coeff = C.a[n - 3 - j0]
        src = M.rows[j0]
        for j in range(n):
            acc[j] += coeff * src[j]
    rows.append(tuple(acc))
    return DenseMatrix(n, tuple(rows))


def dense_times_comrade(M: DenseMatrix, C: ComradeMatrix) -> DenseMatrix:
    """M*C in O(n^2): each column of C has at most four nonzeros."""
    if C.n != M.n:
        raise ValueError("size mismatch")
    n = C.n
    dense = to_dense(C)
    col_nonzeros = [[(k, dense.rows[k][j]) for k in range(n) if dense.rows[k][j] != 0]
                    for j in range(n)]
    rows = []
    for i in range(n):
        mrow = M.rows[i]
        rows.append(tuple(sum((mrow[k] * v for k, v in col_nonzeros[j]), start=mrow[0] * 0)
                          for j in range(n)))
    return DenseMatrix(n, tuple(rows))


def example33(n: int) -> ComradeMatrix:
    """Banded test family whose entries are halves (binary64-exact):
    diagonal -3/2 with a -2 corner, off-diagonals 1/2, last row -1/2
    except gamma_n = 0."""
    beta = [Fraction(-3, 2)] * (n - 1) + [Fraction(-2)]
    alpha = [Fraction(1, 2)] * (n - 1)
    gamma = [Fraction(1, 2)] * (n - 2) + [Fraction(0)]
    a = [Fraction(-1, 2)] * (n - 2)
    return ComradeMatrix(n, tuple(beta), tuple(alpha), tuple(gamma), tuple(a))


def random_comrade(n: int, seed: int, zero_pivot_bias: float = 0.0) -> ComradeMatrix:
    """Deterministic random instance with integer entries in [-9, 9].

    With probability ``zero_pivot_bias`` the instance is made degenerate:
    beta_1 is forced to 0 (so the first pivot vanishes) and, half the
    time, one interior alpha is zeroed as well (so inversion also needs
    the alpha substitution).
    """
    rng = random.Random(f"comrade:{n}:{seed}:{zero_pivot_bias}")
    pick = lambda count: [Fraction(rng.randint(-9, 9)) for _ in range(count)]
    beta, alpha, gamma, a = pick(n), pick(n - 1), pick(n - 1), pick(n - 2)
    if rng.random() < zero_pivot_bias:
        beta[0] = Fraction(0)
        if rng.random() < 0.5:
            alpha[rng.randrange(n - 2)] = Fraction(0)
    return ComradeMatrix(n, tuple(beta), tuple(alpha), tuple(gamma), tuple(a))
