"""
Tests du critère combinatoire et de la réduction des paramètres généraux.
"""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from src.arith.rational import QValue
from src.core.exceptions import PatternError, ValidationError
from src.criterion import (
    GeneralParams,
    Verdict,
    WeightSet,
    a_set,
    bracket,
    check_general,
    check_pairwise,
    check_theorem,
    crossing_witness,
    is_crossing,
    multi_factor_check,
    reduce_general,
)
from src.gt.patterns import HighestWeight

from .conftest import hw


@st.composite
def weight_pairs(draw):
    n = draw(st.integers(2, 4))
    entries = st.lists(st.integers(-3, 3), min_size=n, max_size=n).map(
        lambda xs: HighestWeight(tuple(sorted(xs, reverse=True)))
    )
    return draw(entries), draw(entries)


class TestSets:

    def test_a_set(self):
        assert a_set(hw(1, 0)).sorted() == [-1, 1]
        assert a_set(hw(2, 1, 0)).sorted() == [-2, 0, 2]

    @pytest.mark.parametrize("a, b, expected", [
        ({1, 3}, {2, 4}, True),
        ({2, 4}, {1, 3}, True),
        ({1, 2}, {3, 4}, False),
        ({1, 4}, {2, 3}, False),
        (set(), {1, 2}, False),
    ])
    def test_is_crossing(self, a, b, expected):
        assert is_crossing(WeightSet.of(a), WeightSet.of(b)) is expected

    def test_bracket_is_open_interval(self):
        assert bracket((1, -1), 1, 2) == frozenset({0})
        assert bracket((2, 0, -2), 1, 3) == frozenset({1, -1})
        assert bracket((1, 0), 1, 2) == frozenset()


class TestTheorem:

    @pytest.mark.parametrize("lam, mu, expected", [
        ((1, 0), (1, 0), Verdict.IRREDUCIBLE),
        ((1, 0), (0, -1), Verdict.REDUCIBLE),
        ((0, -1), (1, 0), Verdict.REDUCIBLE),
        ((2, 0), (1, 0), Verdict.IRREDUCIBLE),
        ((1, 0, 0), (0, 0, -1), Verdict.REDUCIBLE),
        ((3, 0), (1, 1), Verdict.IRREDUCIBLE),
    ])
    def test_examples(self, lam, mu, expected):
        assert check_theorem(hw(*lam), hw(*mu)) is expected
        assert check_pairwise(hw(*lam), hw(*mu)) is expected

    def test_witness(self):
        assert crossing_witness(hw(1, 0), hw(0, -1)) == (-2, -1, 0, 1)
        assert crossing_witness(hw(1, 0), hw(1, 0)) is None

    def test_rank_mismatch(self):
        with pytest.raises(PatternError):
            check_theorem(hw(1, 0), hw(1, 0, 0))

    def test_debug_cross_check(self, debug):
        assert check_theorem(hw(1, 0), hw(0, -1)) is Verdict.REDUCIBLE

    @given(weight_pairs())
    def test_symmetric(self, pair):
        lam, mu = pair
        assert check_theorem(lam, mu) is check_theorem(mu, lam)

    @given(weight_pairs(), st.integers(-3, 3))
    def test_shift_equivariant(self, pair, t):
        lam, mu = pair
        assert check_theorem(lam.shifted(t), mu.shifted(t)) is check_theorem(lam, mu)

    @given(weight_pairs())
    def test_matches_pairwise(self, pair):
        lam, mu = pair
        assert check_theorem(lam, mu) is check_pairwise(lam, mu)


class TestGeneralParameters:

    def test_normalized_parameter(self):
        assert GeneralParams(hw(1, 0), h=Fraction(2), a=Fraction(4)).b == 1

    def test_default_signs(self):
        assert GeneralParams(hw(1, 0, 0)).eps == (1, 1, 1)

    @pytest.mark.parametrize("kwargs", [
        {"h": Fraction(0)},
        {"a": Fraction(0)},
        {"eps": (1, 2)},
        {"eps": (1,)},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            GeneralParams(hw(1, 0), **kwargs)

    def test_equal_parameters(self):
        q = QValue.parse("2")
        reduction = reduce_general(GeneralParams(hw(1, 0)), GeneralParams(hw(0, -1)), q)
        assert reduction.k == 0
        assert reduction.pair == (hw(1, 0), hw(0, -1))

    def test_ratio_outside_q_powers(self):
        q = QValue.parse("2")
        verdict, reduction, witness = check_general(
            GeneralParams(hw(1, 0), a=Fraction(8)), GeneralParams(hw(1, 0)), q
        )
        assert verdict is Verdict.IRREDUCIBLE
        assert reduction.reason == "ratio not in q^{2Z}"
        assert witness is None

    def test_ratio_in_q_powers(self):
        q = QValue.parse("2")
        reduction = reduce_general(GeneralParams(hw(1, 0), a=Fraction(4)), GeneralParams(hw(1, 0)), q)
        assert reduction.k == -1
        assert reduction.pair == (hw(1, 0), hw(2, 1))

    def test_shift_absorbs_reducibility(self):
        q = QValue.parse("2")
        # b'/b = q^2: le second facteur devient (1,0) − (1,1) = (0,−1)
        verdict, reduction, witness = check_general(
            GeneralParams(hw(1, 0)), GeneralParams(hw(1, 0), a=Fraction(4)), q
        )
        assert reduction.k == 1
        assert verdict is Verdict.REDUCIBLE
        assert witness == (-2, -1, 0, 1)

    def test_multi_factor(self):
        q = QValue.parse("3/2")
        irreducible = [GeneralParams(hw(1, 0)) for _ in range(3)]
        assert multi_factor_check(irreducible, q) is Verdict.IRREDUCIBLE
        mixed = [GeneralParams(hw(5, 5)), GeneralParams(hw(1, 0)), GeneralParams(hw(0, -1))]
        assert multi_factor_check(mixed, q) is Verdict.REDUCIBLE

    def test_multi_factor_needs_factors(self):
        with pytest.raises(ValidationError):
            multi_factor_check([], QValue.parse("2"))
