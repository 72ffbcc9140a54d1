from fractions import Fraction

import pytest
from hypothesis import given, settings as hsettings
from hypothesis import strategies as st

from src.arith import LaurentPoly
from src.core.exceptions import ArithmeticDomainError
from src.linalg import (
    EchelonBasis,
    MatrixL,
    MatrixL2,
    MatrixR,
    invariant_span,
    joint_kernel,
    rank,
    rank_of_vectors,
    rref_rank_kernel,
    unit_vector,
)

entries = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(rows, cols):
    return st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(MatrixR.from_rows)


# ---------------------------------------------------------
# Réduction
# ---------------------------------------------------------

def test_rref_examples():
    ident = rref_rank_kernel(MatrixR.identity(3))
    assert ident.rank == 3 and ident.kernel == []

    zero = rref_rank_kernel(MatrixR.zeros(2))
    assert zero.rank == 0 and len(zero.kernel) == 2

    line = rref_rank_kernel(MatrixR.from_rows([[1, 2], [2, 4]]))
    assert line.rank == 1
    assert line.kernel == [[Fraction(-2), Fraction(1)]]


@hsettings(max_examples=40)
@given(m=matrices(3, 4))
def test_rank_nullity(m):
    result = rref_rank_kernel(m)
    assert result.rank + len(result.kernel) == m.cols
    for v in result.kernel:
        assert not any(m.apply(v))


@hsettings(max_examples=40)
@given(m=matrices(3, 3))
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


def test_joint_kernel_examples():
    assert joint_kernel([MatrixR.identity(2)], 2) == []
    assert len(joint_kernel([], 2)) == 2
    assert joint_kernel([MatrixR.unit(2, 0, 1), MatrixR.unit(2, 1, 0)], 2) == []


def test_invariant_span_examples():
    e1 = unit_vector(2, 0)
    assert len(invariant_span([MatrixR.identity(2)], [e1])) == 1
    assert len(invariant_span([MatrixR.unit(2, 1, 0)], [e1])) == 2
    seeds = [[1, 1, 0], [2, 2, 0], [0, 0, 1]]
    assert len(invariant_span([], seeds)) == rank_of_vectors(seeds) == 2


def test_invariant_span_graded():
    # décalage gradué e_0 -> e_1 -> e_2
    shift = MatrixR.from_triplets(3, 3, [(1, 0, 1), (2, 1, 1)])
    span = invariant_span([shift], [unit_vector(3, 0)], grading=[0, 1, 2])
    assert len(span) == 3


def test_invariant_span_limit():
    shift = MatrixR.from_triplets(4, 4, [(1, 0, 1), (2, 1, 1), (3, 2, 1)])
    assert len(invariant_span([shift], [unit_vector(4, 0)], limit=2)) == 2
    assert len(invariant_span([shift], [unit_vector(4, 0)], limit=10)) == 4


def test_echelon_basis_incremental():
    basis = EchelonBasis()
    assert basis.add([1, 2, 0])
    assert basis.add([0, 1, 1])
    assert not basis.add([1, 3, 1])
    assert basis.contains([2, 5, 1])
    assert basis.dimension == 2


# ---------------------------------------------------------
# Matrices de Laurent
# ---------------------------------------------------------

def test_laurent_matrix_product_and_evaluation():
    a = MatrixR.from_rows([[1, 2], [0, 1]])
    b = MatrixR.from_rows([[0, 1], [1, 0]])
    x = MatrixL(2, 2, {0: a, -1: b})
    y = MatrixL(2, 2, {1: b})
    prod = x @ y
    assert prod.eval_at(3) == x.eval_at(3) @ y.eval_at(3)
    assert prod.scale_arg(2).eval_at(3) == prod.eval_at(6)


def test_laurent_matrix_scalar_detection():
    p = LaurentPoly({0: 1, -1: Fraction(-2, 3)})
    assert MatrixL.scalar(p, 3).as_scalar() == p
    assert MatrixL(2, 2, {0: MatrixR.unit(2, 0, 1)}).as_scalar() is None


def test_bivariate_products_commute_for_commuting_coefficients():
    d = MatrixR.diagonal([1, 2])
    x = MatrixL(2, 2, {0: d, -1: MatrixR.identity(2)})
    assert MatrixL2.product_uv(x, x) == MatrixL2.product_vu(x, x)
    n = MatrixL(2, 2, {0: MatrixR.unit(2, 0, 1)})
    assert MatrixL2.product_uv(n, x) != MatrixL2.product_vu(x, n)


def test_derivative_requires_polynomial():
    with pytest.raises(ArithmeticDomainError):
        MatrixL(1, 1, {-1: MatrixR.identity(1)}).derivative()
