"""
Tests de l'oracle d'algèbre linéaire.
"""

from fractions import Fraction

import pytest

from src.arith.rational import QValue
from src.core.exceptions import GuardError
from src.oracle import (
    burnside_algebra_dim,
    burnside_check,
    is_cyclic_from_top,
    oracle_irreducible,
    singular_contains,
    singular_space,
)
from src.pipeline.services import tensor_module

from .conftest import hw


class TestSingularSpace:

    def test_irreducible_pair(self, L10_L10):
        basis = singular_space(L10_L10)
        assert len(basis) == 1
        assert singular_contains(L10_L10, L10_L10.top_vector())

    def test_reducible_pair_has_extra_vector(self, L0m1_L10):
        assert len(singular_space(L0m1_L10)) >= 2

    def test_reducible_pair_in_given_order(self, L10_L0m1):
        # L(1,0) ⊗ L(0,−1): ξ ⊗ ξ' engendre un sous-module propre, sans second vecteur singulier
        basis = singular_space(L10_L0m1)
        assert len(basis) == 1
        assert singular_contains(L10_L0m1, L10_L0m1.top_vector())
        assert not is_cyclic_from_top(L10_L0m1)

    def test_evaluation_module(self, L210):
        assert len(singular_space(L210)) == 1

    @pytest.mark.parametrize("fixture", ["L10_L10", "L10_L0m1", "L0m1_L10"])
    def test_blocked_matches_full(self, request, fixture):
        module = request.getfixturevalue(fixture)
        assert len(singular_space(module, blocked=True)) == len(singular_space(module, blocked=False))


class TestVerdict:

    def test_cyclic_irreducible(self, L10_L10):
        assert is_cyclic_from_top(L10_L10)

    def test_cyclic_debug_extension(self, L10_L10, debug):
        assert is_cyclic_from_top(L10_L10)

    def test_irreducible(self, L10_L10):
        verdict = oracle_irreducible(L10_L10)
        assert verdict.irreducible
        assert verdict.to_dict() == {"cyclic_from_top": True, "singular_dim": 1, "irreducible": True}

    @pytest.mark.parametrize("fixture", ["L10_L0m1", "L0m1_L10"])
    def test_reducible_both_orders(self, request, fixture):
        assert not oracle_irreducible(request.getfixturevalue(fixture)).irreducible

    def test_distinct_weights(self, q):
        module = tensor_module([hw(2, 0), hw(1, 0)], q)
        verdict = oracle_irreducible(module, with_burnside=True)
        assert verdict.irreducible
        assert verdict.burnside_algebra_dim == 36

    def test_generic_parameter_ratio(self):
        q = QValue.parse("2")
        module = tensor_module([hw(1, 0), hw(0, -1)], q, [Fraction(8), Fraction(1)])
        assert oracle_irreducible(module).irreducible

    def test_shifted_parameter_ratio(self):
        # b'/b = q^2 équivaut à L(1,0) ⊗ L(0,−1)
        q = QValue.parse("2")
        module = tensor_module([hw(1, 0), hw(1, 0)], q, [Fraction(1), Fraction(4)])
        assert not oracle_irreducible(module).irreducible


class TestBurnside:

    def test_full_algebra(self, L10_L10):
        assert burnside_algebra_dim(L10_L10) == 16
        assert burnside_check(L10_L10)

    def test_proper_algebra(self, L0m1_L10):
        assert burnside_algebra_dim(L0m1_L10) < 16
        assert not burnside_check(L0m1_L10)

    def test_stops_at_full_algebra(self, q):
        module = tensor_module([hw(3, 0), hw(2, 0)], q)
        assert burnside_algebra_dim(module) == module.dim ** 2 == 144

    def test_bound(self, L10_L10):
        with pytest.raises(GuardError, match="burnside bound"):
            burnside_algebra_dim(L10_L10, bound=3)
