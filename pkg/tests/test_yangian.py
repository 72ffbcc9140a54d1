"""
Tests des modules d'évaluation, des R-matrices et des mineurs quantiques.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from src.arith.rational import QValue
from src.linalg.laurent_matrix import MatrixL
from src.linalg.matrix import MatrixR
from src.linalg.reduction import rank
from src.yangian import (
    RTT_SUITE,
    MinorIdentity,
    RMatrixKind,
    antisymmetrizer,
    comatrix,
    fused_r_matrix,
    q_permutation,
    qdet,
    quantum_minor,
    r_matrix,
    tensor_highest_weight,
    trigonometric_r_matrix,
    verify_minor_identities,
)
from src.yangian.modules import eval_tij, tensor_tij

Q = QValue.parse("3/2")
nonzero = st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(lambda x: x != 0)


class TestEvalModule:

    def test_top_vector_eigenvalues(self, L10):
        top = L10.top_vector()
        for i, nu in enumerate(L10.highest_weight(), start=1):
            for e in (0, -1):
                assert L10.t(i, i).coefficient(e).apply(top) == [nu.coefficient(e) * x for x in top]

    def test_triangular_parts(self, L210):
        for i in range(1, 4):
            for j in range(1, 4):
                if i < j:
                    assert eval_tij(L210, i, j).coefficient(0).is_zero()
                if i > j:
                    assert eval_tij(L210, i, j).coefficient(-1).is_zero()

    def test_t21_is_constant_for_gl2(self, L10):
        assert L10.t(2, 1).support() == (0,)

    def test_degree_and_support(self, L10):
        assert L10.degree == 1
        for i in (1, 2):
            for j in (1, 2):
                assert set(L10.t(i, j).support()) <= {0, -1}


class TestTensorModule:

    def test_support_in_degree_range(self, L10_L10):
        for i in (1, 2):
            for j in (1, 2):
                assert set(tensor_tij(L10_L10, i, j).support()) <= {0, -1, -2}

    def test_top_vector_is_highest(self, L10_L0m1):
        top = L10_L0m1.top_vector()
        nus = tensor_highest_weight(L10_L0m1)
        for i, nu in enumerate(nus, start=1):
            for e in (0, -1, -2):
                assert L10_L0m1.t(i, i).coefficient(e).apply(top) == [nu.coefficient(e) * x for x in top]
        for _, _, _, m in L10_L0m1.raising_matrices():
            assert not any(m.apply(top))

    def test_weights_are_sums(self, L10_L0m1):
        first, second = L10_L0m1.factors
        expected = [
            tuple(a + b for a, b in zip(w1, w2))
            for w1 in first.weights
            for w2 in second.weights
        ]
        assert L10_L0m1.dim == 4
        assert L10_L0m1.weights == expected
        assert L10_L0m1.weights == [(1, -1), (0, 0), (0, 0), (-1, 1)]


class TestRMatrix:

    @given(nonzero, nonzero)
    @hsettings(max_examples=25, deadline=None)
    def test_homogeneous(self, u, v):
        trig = trigonometric_r_matrix(2, Q)
        c = Q.value ** 2
        assert trig.evaluate(c * u, c * v) == trig.evaluate(u, v).scale(c)

    def test_fused_two_parameters_is_trigonometric(self):
        u, v = Fraction(2), Fraction(-1, 3)
        assert fused_r_matrix(3, Q, [u, v]) == trigonometric_r_matrix(3, Q).evaluate(u, v)

    def test_kind_selection(self):
        assert r_matrix(RMatrixKind.CONSTANT, 2, Q).shape == (4, 4)
        trig = r_matrix("trigonometric", 2, Q)
        assert trig.evaluate(1, 0) == trig.r_u
        fused = r_matrix(RMatrixKind.FUSED, 2, Q, [Fraction(1), Q.power(-2), Q.power(-4)])
        assert fused.shape == (8, 8)

    def test_q_permutation_is_involution(self):
        p = q_permutation(3, Q)
        assert p @ p == MatrixR.identity(9)

    def test_antisymmetrizer_order_one(self):
        assert antisymmetrizer(3, 1, Q) == MatrixR.identity(3)

    @pytest.mark.parametrize("n", [2, 3])
    def test_antisymmetrizer_order_two(self, n):
        a2 = antisymmetrizer(n, 2, Q)
        assert a2 == MatrixR.identity(n * n) - q_permutation(n, Q)
        assert rank(a2) == n * (n - 1) // 2

    def test_fused_at_q_powers_is_antisymmetrizer(self, L210):
        report = verify_minor_identities(L210, [MinorIdentity.ANTISYMMETRIZER])
        assert report.ok
        assert report.checked["antisymmetrizer"] == 2


class TestMinors:

    def test_single_entry(self, L10):
        assert quantum_minor(L10, [1], [2]) == L10.t(1, 2)

    def test_empty_minor_is_identity(self, L10):
        assert quantum_minor(L10, [], []) == MatrixL.identity(2)

    def test_repeated_index_vanishes(self, L210):
        assert quantum_minor(L210, [1, 1], [1, 2]).is_zero()
        assert quantum_minor(L210, [1, 3], [2, 2]).is_zero()

    def test_row_permutation_sign(self, L10):
        assert quantum_minor(L10, [2, 1], [1, 2]) == quantum_minor(L10, [1, 2], [1, 2]).scale(-Q.value)

    def test_qdet_is_scalar(self, L10, L210):
        assert qdet(L10).as_scalar() is not None
        assert qdet(L210).as_scalar() is not None

    def test_comatrix_gl2(self, L10):
        hat = comatrix(L10)
        assert hat[0][0] == L10.t(2, 2)
        assert hat[0][1] == L10.t(1, 2).scale(-Q.value)

    def test_minor_suite_on_evaluation_module(self, L10):
        report = verify_minor_identities(L10)
        assert report.ok, report.failures
        assert report.checked["qdet_highest_eigenvalue"] == 1

    def test_minor_suite_on_gl3(self, L210):
        report = verify_minor_identities(L210, [
            MinorIdentity.ROW_COLUMN,
            MinorIdentity.QDET,
            MinorIdentity.MINOR_RELATION,
            MinorIdentity.COMATRIX,
        ])
        assert report.ok, report.failures
        assert report.checked["minor_relation"] == 1

    def test_coproduct_on_tensor(self, L10_L10):
        report = verify_minor_identities(L10_L10, [MinorIdentity.COPRODUCT, MinorIdentity.CENTRALITY])
        assert report.ok, report.failures
        assert report.checked["coproduct"] == 4 + 1

    def test_rtt_suite_with_cap(self, L10):
        report = verify_minor_identities(L10, RTT_SUITE, max_instances=2)
        assert report.ok, report.failures
        assert report.checked["rtt"] == 16
