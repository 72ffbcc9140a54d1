import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.exceptions import PatternError
from src.gt.patterns import (
    GTPattern,
    HighestWeight,
    dominant_weights,
    enumerate_patterns,
    highest_pattern,
    l_values,
    pattern_weight,
    shift_pattern,
    weyl_dimension,
)

from .conftest import hw


def test_pattern_counts():
    assert len(enumerate_patterns(hw(5))) == 1
    assert len(enumerate_patterns(hw(1, 0))) == 2
    assert len(enumerate_patterns(hw(2, 1, 0))) == 8


def test_highest_pattern_first():
    lam = hw(2, 1, 0)
    assert enumerate_patterns(lam)[0] == highest_pattern(lam)


@given(st.lists(st.integers(-2, 2), min_size=1, max_size=4))
def test_enumeration_matches_weyl_dimension(entries):
    lam = HighestWeight(tuple(sorted(entries, reverse=True)))
    patterns = enumerate_patterns(lam)
    assert len(patterns) == weyl_dimension(lam)
    assert len(set(patterns)) == len(patterns)
    assert all(p.is_valid() for p in patterns)


def test_pattern_weight():
    assert pattern_weight(highest_pattern(hw(2, 1, 0))) == (2, 1, 0)
    assert pattern_weight(GTPattern(((1, 0), (0,)))) == (0, 1)
    assert pattern_weight(GTPattern(((1, 0), (1,)))) == (1, 0)


def test_shift_pattern():
    top = highest_pattern(hw(1, 0))
    assert shift_pattern(top, 1, 1, +1) is None
    assert shift_pattern(top, 1, 1, -1) == GTPattern(((1, 0), (0,)))
    with pytest.raises(PatternError):
        shift_pattern(highest_pattern(hw(3)), 1, 1, -1)


def test_l_values():
    assert hw(2, 1, 0).l_values() == (2, 0, -2)
    assert l_values(GTPattern(((1, 0), (1,))), 2) == (1, -1)
    assert hw(0, 0, 0).l_values() == (0, -1, -2)


def test_non_dominant_weight_rejected():
    with pytest.raises(PatternError):
        hw(0, 1)


def test_dominant_weights_box():
    weights = dominant_weights(2, -1, 1)
    assert hw(1, -1) in weights
    assert all(w[0] >= w[1] for w in weights)
    assert len(dominant_weights(2, -1, 1, max_width=1)) == len(weights) - 1
