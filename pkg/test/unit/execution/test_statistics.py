"""
Tests for src/execution/statistics.py
"""

import math
from fractions import Fraction

import pytest

from src.execution.statistics import IntegerAccumulator, z_value


def test_z_value_95():
    assert z_value(0.95) == pytest.approx(1.959964, rel=1e-5)


def test_mean_and_variance_exact():
    acc = IntegerAccumulator()
    acc.extend([1, 2, 3])
    assert acc.mean == Fraction(2)
    assert acc.variance == Fraction(1)
    assert acc.stddev == 1.0
    assert acc.ci_halfwidth() == pytest.approx(z_value() / math.sqrt(3))


def test_single_observation_has_zero_spread():
    acc = IntegerAccumulator()
    acc.add(7)
    assert acc.variance == 0
    assert acc.ci_halfwidth() == 0.0


def test_merge_matches_sequential():
    """Test merged partial sums equal one accumulator over all values"""
    left, right, whole = IntegerAccumulator(), IntegerAccumulator(), IntegerAccumulator()
    left.extend([7, 7, 9])
    right.extend([8, 10])
    whole.extend([7, 7, 9, 8, 10])
    left.merge(right)
    assert (left.count, left.total, left.total_sq) == (whole.count, whole.total, whole.total_sq)
    assert left.histogram == whole.histogram


def test_sorted_histogram():
    acc = IntegerAccumulator()
    acc.extend([9, 7, 9, 8])
    assert list(acc.sorted_histogram().items()) == [(7, 1), (8, 1), (9, 2)]
