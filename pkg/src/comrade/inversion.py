"""Inverse of a comrade matrix from its factorization, in O(n^2) ops.

Column order is the whole trick.  Columns n and n-1 fall out of
back-substitution against the factors (the corresponding right-hand
sides after the forward pass are just (0,..,0,1) and (0,..,1,-x_{n-1})).
Every earlier column j then follows from columns j+1, j+2 and n because
column j+1 of the matrix has at most four structural nonzeros, which is
the identity S*C = I read one column at a time:

    alpha_j Col_j + beta_{j+1} Col_{j+1} + gamma_{j+2} Col_{j+2}
        + a_{n-j} Col_n = E_{j+1}

(the a-term drops out for j = n-2).  The recursion divides by alpha_j,
so in SYMBOLIC mode any exactly-zero alpha_1..alpha_{n-2} is replaced by
t *before* factorization, and the recursion uses the +t-bumped diagonal
recorded by the factorization, so all recurrences are identities of one
coherent perturbed matrix M(t) with M(0) equal to the input.  Evaluating
at t = 0 then recovers the exact inverse; for a nonsingular input the
reduced entries provably have no pole at t = 0 (their denominators
divide det M(t), a polynomial that is det(C) != 0 at t = 0).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

from .factorization import (LUFactors, OpCounter, Substitution, ZeroPivotError,
                            bumped_beta, factorize)
from .matrix import ComradeMatrix, DenseMatrix, SingularMatrixError
from .scalars import RationalFunction, ScalarMode

_T = RationalFunction.t()


@dataclass(frozen=True)
class InverseResult:
    """Evaluated inverse plus run metadata.

    determinant and the inverse entries are Fractions in EXACT and
    SYMBOLIC mode (t already substituted away) and floats in FLOAT mode.
    substitutions lists pivot substitutions first, then alpha ones.
    """

    inverse: DenseMatrix
    determinant: object
    substitutions: tuple
    op_count: int


def _column_n(F: LUFactors, alpha, ops: OpCounter):
    n = len(F.mu)
    w = F.mode.scalar
    s = [None] * n
    s[n - 1] = w(1) / F.mu[n - 1]
    ops.tally(1)
    for i0 in range(n - 2, -1, -1):
        s[i0] = -(alpha[i0] * s[i0 + 1]) / F.mu[i0]
        ops.tally(2)
    return s


def _column_n_minus_1(F: LUFactors, alpha, ops: OpCounter):
    n = len(F.mu)
    w = F.mode.scalar
    s = [None] * n
    s[n - 1] = -F.x[n - 2] / F.mu[n - 1]
    ops.tally(1)
    s[n - 2] = (w(1) - alpha[n - 2] * s[n - 1]) / F.mu[n - 2]
    ops.tally(3)
    for i0 in range(n - 3, -1, -1):
        s[i0] = -(alpha[i0] * s[i0 + 1]) / F.mu[i0]
        ops.tally(2)
    return s


def last_two_columns(F: LUFactors, C: ComradeMatrix,
                     ops: OpCounter | None = None, parallel: bool = False):
    """Columns n and n-1 of the inverse, as top-to-bottom lists.

    C must be the matrix F was computed from (same working entries), so
    its superdiagonal is the one sitting along U.  The two columns are
    independent; ``parallel=True`` computes them on two threads with
    private op sub-counters, bit-identically to the sequential path.
    """
    if ops is None:
        ops = OpCounter()
    alpha = [F.mode.scalar(v) for v in C.alpha]
    if parallel:
        ops_n, ops_n1 = OpCounter(), OpCounter()
        with ThreadPoolExecutor(max_workers=2) as pool:
            fut_n = pool.submit(_column_n, F, alpha, ops_n)
            fut_n1 = pool.submit(_column_n_minus_1, F, alpha, ops_n1)
            col_n, col_n1 = fut_n.result(), fut_n1.result()
        ops.tally(ops_n.count + ops_n1.count)
        return col_n, col_n1
    return _column_n(F, alpha, ops), _column_n_minus_1(F, alpha, ops)


def remaining_columns(col_n, col_n1, C: ComradeMatrix, mode: ScalarMode,
                      ops: OpCounter | None = None):
    """Columns n-2 down to 1 (returned in that order) via the four-term
    column recursion.  C must carry the same working entries the first
    two columns were computed from, including any t-substituted alphas
    and +t-bumped diagonal."""
    if ops is None:
        ops = OpCounter()
    n = C.n
    w = mode.scalar
    beta = [w(v) for v in C.beta]
    alpha = [w(v) for v in C.alpha]
    gamma = [w(v) for v in C.gamma]
    a = [w(v) for v in C.a]
    one, zero = w(1), w(0)

    cols = []
    # j = n-2: no a-term, column n-1 of the matrix ends in gamma_n
    b, g, al = beta[n - 2], gamma[n - 2], alpha[n - 3]
    col = []
    for i0 in range(n):
        e = one if i0 == n - 2 else zero
        col.append((e - b * col_n1[i0] - g * col_n[i0]) / al)
        ops.tally(5)
    cols.append(col)
    for j in range(n - 3, 0, -1):                     # 1-based column index j
        cj1 = cols[-1]                                # Col_{j+1}
        cj2 = col_n1 if j == n - 3 else cols[-2]      # Col_{j+2}
        b, g, al = beta[j], gamma[j], alpha[j - 1]    # beta_{j+1}, gamma_{j+2}, alpha_j
        coeff_a = a[n - j - 3]                        # a_{n-j}
        col = []
        for i0 in range(n):
            e = one if i0 == j else zero
            col.append((e - b * cj1[i0] - g * cj2[i0] - coeff_a * col_n[i0]) / al)
            ops.tally(7)
        cols.append(col)
    return cols


def invert(C: ComradeMatrix, mode: ScalarMode, *, parallel_columns: bool = False) -> InverseResult:
    """Full inverse; 7n^2 - 5n - 11 field operations when nothing is
    degenerate.  Raises SingularMatrixError when the determinant is
    exactly zero, ZeroPivotError in EXACT/FLOAT mode when the symbolic
    rescue would be needed."""
    n = C.n
    ops = OpCounter()
    w = mode.scalar

    alpha = [w(v) for v in C.alpha]
    alpha_subs = []
    if mode is ScalarMode.SYMBOLIC:
        # only alpha_1..alpha_{n-2} are ever divided by; alpha_{n-1} stays
        for j0 in range(n - 2):
            if alpha[j0] == 0:
                alpha[j0] = _T
                alpha_subs.append(Substitution("alpha", j0 + 1))
    work = ComradeMatrix(n, tuple(w(v) for v in C.beta), tuple(alpha),
                         tuple(w(v) for v in C.gamma), tuple(w(v) for v in C.a))

    F = factorize(work, mode, ops)
    det = F.mu[0]
    for m in F.mu[1:]:
        det = det * m
    ops.tally(n - 1)
    det = mode.finalize(det)
    if det == 0:
        raise SingularMatrixError()
    if mode is not ScalarMode.SYMBOLIC:
        for j0 in range(n - 2):
            if alpha[j0] == 0:
                raise ZeroPivotError(j0 + 1, what="alpha")
    if F.substitutions:
        work = replace(work, beta=bumped_beta(F, work))

    col_n, col_n1 = last_two_columns(F, work, ops, parallel=parallel_columns)
    rest = remaining_columns(col_n, col_n1, work, mode, ops)
    columns = list(reversed(rest)) + [col_n1, col_n]
    rows = tuple(tuple(mode.finalize(columns[j][i0]) for j in range(n))
                 for i0 in range(n))
    return InverseResult(inverse=DenseMatrix(n, rows), determinant=det,
                         substitutions=tuple(F.substitutions) + tuple(alpha_subs),
                         op_count=ops.count)
