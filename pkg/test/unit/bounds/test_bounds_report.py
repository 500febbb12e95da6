"""
Tests for src/bounds/report.py
"""

import json
import logging
import math

import pytest

from src.bounds.achievability import upper_bound_nonadaptive
from src.bounds.converse import greedy_lower_bound, lower_bound_adaptive
from src.bounds.ensemble import ensemble_length_bound
from src.bounds.report import bounds_report, competitive_ratio, reference_scale
from src.utils.file_utils import to_json_text


def test_bounds_report_small_instance():
    """Test report fields equal the individual operations"""
    report = bounds_report(12, 2, 3)
    assert report.M == 3
    assert report.M_available is True
    assert report.lower_lym == 2.0
    assert report.lower_adaptive == pytest.approx(lower_bound_adaptive(12, 2, 3))
    assert report.greedy_lower == pytest.approx(greedy_lower_bound(12, 2, 3))
    assert report.upper_nonadaptive == pytest.approx(upper_bound_nonadaptive(12, 2, 3))
    assert report.ensemble_upper == pytest.approx(ensemble_length_bound(12, 2, 3))
    assert report.entropy_bits == pytest.approx(math.log2(66))
    assert report.competitive_denominator_bits == report.entropy_bits


def test_bounds_report_best_lower():
    report = bounds_report(12, 2, 3)
    assert report.best_lower() == pytest.approx(226 / 66)


def test_bounds_report_unavailable_counting_bound(caplog):
    """Test huge C(n, r) marks M unavailable with a warning"""
    with caplog.at_level(logging.WARNING):
        report = bounds_report(10**6, 2000, 2)
    assert report.M is None
    assert report.M_available is False
    assert report.lower_lym is None
    assert report.greedy_lower is None
    assert report.best_lower() == report.lower_adaptive
    assert 'Counting bound unavailable' in caplog.text


def test_bounds_report_to_dict_is_json():
    data = json.loads(to_json_text(bounds_report(12, 2, 3).to_dict()))
    assert data['M'] == 3
    assert data['lower_lym'] == 2.0
    assert set(data) >= {'n', 'r', 'd', 'block_error_eps', 'upper_nonadaptive',
                         'ensemble_upper', 'reference_scale', 'competitive_denominator_bits'}


def test_bounds_report_eps():
    report = bounds_report(12, 2, 3, 0.5)
    assert report.block_error_eps == 0.5
    assert report.M == 3


def test_competitive_ratio():
    assert competitive_ratio(math.log2(66), 12, 2) == pytest.approx(1.0)
    assert competitive_ratio(1.0, 5, 0) == math.inf


def test_reference_scale():
    assert reference_scale(12, 2, 3) == pytest.approx(6 * 66 ** (1 / 7))
    assert reference_scale(12, 0, 3) == 0.0
