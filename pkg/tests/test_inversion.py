from dataclasses import replace
from fractions import Fraction as F

import pytest

import support
from comrade import (DenseMatrix, Polynomial, RationalFunction, ScalarMode,
                     SingularMatrixError, Substitution, ZeroPivotError,
                     comrade_times_dense, dense_det, dense_invert,
                     dense_times_comrade, determinant, example33, factorize,
                     invert, last_two_columns, make_comrade, random_comrade,
                     remaining_columns, to_dense)
from comrade.factorization import OpCounter, bumped_beta

T = RationalFunction.t()


def two_sided_identity(C, S):
    I = DenseMatrix.identity(C.n)
    return comrade_times_dense(C, S) == I and dense_times_comrade(S, C) == I


class TestInvertFixtures:
    def test_sample5_exact(self):
        res = invert(support.SAMPLE5, ScalarMode.EXACT)
        assert res.inverse.rows == support.SAMPLE5_INVERSE
        assert res.determinant == support.SAMPLE5_DET
        assert res.substitutions == ()
        assert res.op_count == 7 * 25 - 5 * 5 - 11
        assert all(isinstance(v, F) for row in res.inverse.rows for v in row)
        assert two_sided_identity(support.SAMPLE5, res.inverse)

    def test_sample5_symbolic_agrees(self):
        res = invert(support.SAMPLE5, ScalarMode.SYMBOLIC)
        assert res.inverse.rows == support.SAMPLE5_INVERSE
        assert res.substitutions == ()

    def test_zero_pivot4_symbolic(self):
        res = invert(support.ZERO_PIVOT4, ScalarMode.SYMBOLIC)
        assert res.inverse.rows == support.ZERO_PIVOT4_INVERSE
        assert res.determinant == 24
        assert res.substitutions == (Substitution("pivot", 1),)
        assert res.op_count == 7 * 16 - 5 * 4 - 11
        assert two_sided_identity(support.ZERO_PIVOT4, res.inverse)

    @pytest.mark.parametrize("mode", [ScalarMode.EXACT, ScalarMode.FLOAT])
    def test_zero_pivot4_other_modes_refuse(self, mode):
        with pytest.raises(ZeroPivotError) as info:
            invert(support.ZERO_PIVOT4, mode)
        assert info.value.index == 1

    def test_identity_embedding(self):
        res = invert(support.IDENTITY3, ScalarMode.SYMBOLIC)
        assert res.inverse == DenseMatrix.identity(3)
        assert res.determinant == 1
        assert res.substitutions == (Substitution("alpha", 1),)


class TestSymbolicColumns:
    """The unevaluated rational-function entries behind the 4x4 fixture."""

    def _working(self):
        C = support.ZERO_PIVOT4
        Ft = factorize(C, ScalarMode.SYMBOLIC)
        work = replace(C, beta=bumped_beta(Ft, C))
        return Ft, C, work

    def test_last_two_columns_entries(self):
        Ft, C, _ = self._working()
        col_n, col_n1 = last_two_columns(Ft, C)
        den = Polynomial((-12, 14))                       # 2(7t - 6)
        assert col_n[3] == RationalFunction(Polynomial((1, 8)), den)
        assert col_n[2] == RationalFunction(Polynomial((-2, -1)), den)
        assert [c.at_zero() for c in col_n] == [F(-5, 12), 0, F(1, 6), F(-1, 12)]
        # (1, n-1) entry: -15/(28t - 24), the source of the 5/8 in the
        # evaluated inverse
        assert col_n1[0] == RationalFunction(Polynomial((-15,)),
                                             Polynomial((-24, 28)))
        assert col_n1[0].at_zero() == F(5, 8)

    def test_remaining_columns_entries(self):
        Ft, C, work = self._working()
        col_n, col_n1 = last_two_columns(Ft, C)
        cols = remaining_columns(col_n, col_n1, work, ScalarMode.SYMBOLIC)
        col2, col1 = cols                                 # n-2 first, then 1
        assert col1[0] == RationalFunction(Polynomial((7,)), Polynomial((-6, 7)))
        assert [c.at_zero() for c in col1] == [F(-7, 6), 1, F(2, 3), F(-11, 6)]
        assert [c.at_zero() for c in col2] == [F(7, 24), 0, F(1, 12), F(-1, 24)]


class TestDegenerateHandling:
    @pytest.mark.parametrize("mode", list(ScalarMode))
    def test_singular_raises(self, mode):
        with pytest.raises(SingularMatrixError) as info:
            invert(support.SINGULAR4, mode)
        assert str(info.value) == "matrix is singular"

    def test_singular_found_after_substitution(self):
        # the zero pivot is substituted first; singularity emerges from
        # the reduced determinant, not from a zero mu
        with pytest.raises(SingularMatrixError):
            invert(support.PROPORTIONAL4, ScalarMode.SYMBOLIC)

    def test_alpha_zero_exact_refuses(self):
        with pytest.raises(ZeroPivotError) as info:
            invert(support.ALPHA_ZERO4, ScalarMode.EXACT)
        assert info.value.index == 1
        assert str(info.value) == "zero alpha at index 1; retry in symbolic mode"
        with pytest.raises(ZeroPivotError):
            invert(support.ALPHA_ZERO4, ScalarMode.FLOAT)

    def test_alpha_zero_symbolic_succeeds(self):
        res = invert(support.ALPHA_ZERO4, ScalarMode.SYMBOLIC)
        assert res.substitutions == (Substitution("alpha", 1),)
        assert res.determinant == support.ALPHA_ZERO4_DET
        assert res.inverse == dense_invert(to_dense(support.ALPHA_ZERO4))

    def test_last_alpha_zero_needs_no_substitution(self):
        # nothing divides by alpha_{n-1}; exact mode must handle it
        C = make_comrade(4, (2, 3, 4, 5), (1, 1, 0), (1, 1, 1), (1, 1))
        res = invert(C, ScalarMode.EXACT)
        assert res.substitutions == ()
        assert res.inverse == dense_invert(to_dense(C))


class TestInvertProperties:
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    @pytest.mark.parametrize("bias", [0.0, 1.0])
    def test_matches_oracle(self, n, bias):
        for seed in range(12):
            C = random_comrade(n, seed, bias)
            D = to_dense(C)
            if dense_det(D) == 0:
                with pytest.raises(SingularMatrixError):
                    invert(C, ScalarMode.SYMBOLIC)
                continue
            res = invert(C, ScalarMode.SYMBOLIC)
            assert res.inverse == dense_invert(D)
            assert two_sided_identity(C, res.inverse)
            assert res.determinant == determinant(C, ScalarMode.SYMBOLIC)

    def test_tridiagonal_special_case(self):
        C = make_comrade(5, (5, 4, 3, 2, 6), (1, 1, 1, 1), (1, 1, 1, 1),
                         (0, 0, 0))
        res = invert(C, ScalarMode.EXACT)
        assert res.inverse == dense_invert(to_dense(C))

    def test_float_mode_small_n(self):
        C = example33(6)
        approx = invert(C, ScalarMode.FLOAT)
        exact = dense_invert(to_dense(C)).as_floats()
        assert (exact - approx.inverse).inf_norm() < 1e-12
        assert all(isinstance(v, float)
                   for row in approx.inverse.rows for v in row)

    @pytest.mark.parametrize("n", [4, 5, 9])
    def test_op_count(self, n):
        res = invert(example33(n), ScalarMode.FLOAT)
        assert res.op_count == 7 * n * n - 5 * n - 11


class TestParallelColumns:
    def test_bit_identical_results(self):
        cases = [
            (support.SAMPLE5, ScalarMode.EXACT),
            (support.ZERO_PIVOT4, ScalarMode.SYMBOLIC),
            (example33(8), ScalarMode.FLOAT),
        ]
        for C, mode in cases:
            seq = invert(C, mode)
            par = invert(C, mode, parallel_columns=True)
            assert par.inverse == seq.inverse
            assert par.determinant == seq.determinant
            assert par.op_count == seq.op_count
            assert par.substitutions == seq.substitutions

    def test_last_two_columns_parallel(self):
        Ft = factorize(support.SAMPLE5, ScalarMode.EXACT)
        ops_seq, ops_par = OpCounter(), OpCounter()
        seq = last_two_columns(Ft, support.SAMPLE5, ops_seq)
        par = last_two_columns(Ft, support.SAMPLE5, ops_par, parallel=True)
        assert par == seq
        assert ops_par.count == ops_seq.count
