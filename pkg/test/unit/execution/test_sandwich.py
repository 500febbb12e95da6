"""
Tests for src/execution/sandwich.py
"""

import logging

import pytest

from src.bounds.achievability import upper_bound_nonadaptive
from src.bounds.converse import adaptive_product_term
from src.coding.types import CodeParams
from src.execution.monte_carlo import LengthStats, mc_expected_length
from src.execution.sandwich import sandwich_check


def _stats(mean, stddev=0.0, trials=100):
    return LengthStats(trials=trials, mean=mean, stddev=stddev, ci95_halfwidth=0.0,
                       min=int(mean), max=int(mean) + 1)


def test_consistent_mean_passes(small_params):
    result = sandwich_check(small_params, _stats(7.5, stddev=1.0))
    assert result.lym_lower == 2.0
    assert result.slack == pytest.approx(0.3)
    assert result.adaptive_term == pytest.approx(adaptive_product_term(12, 2, 3))
    assert result.upper == pytest.approx(upper_bound_nonadaptive(12, 2, 3))
    assert result.passed
    assert result.failures() == []


def test_mean_below_counting_bound_fails(small_params):
    result = sandwich_check(small_params, _stats(1.0))
    assert result.lym_ok is False
    assert not result.passed
    assert 'counting bound' in result.failures()[0]


def test_mean_above_upper_bound_fails(small_params, caplog):
    with caplog.at_level(logging.WARNING):
        result = sandwich_check(small_params, _stats(700.0))
    assert result.upper_ok is False
    assert not result.passed
    assert 'above upper bound' in result.failures()[0]


def test_counting_bound_skipped_when_unavailable():
    params = CodeParams(n=10**6, r=2000, d=2)
    result = sandwich_check(params, _stats(10**5))
    assert result.lym_lower is None
    assert result.lym_ok is None
    assert result.adaptive_ok is True
    assert result.passed


def test_measured_mean_inside_sandwich(small_params):
    stats = mc_expected_length(small_params, 500, master_seed=0)
    result = sandwich_check(small_params, stats)
    assert result.passed
    assert result.to_dict()['passed'] is True
