"""
Tests for src/bounds/achievability.py and src/bounds/ensemble.py
"""

import logging
import math

import numpy as np
import pytest

from src.bounds import ensemble
from src.bounds.achievability import log_upper_bound_nonadaptive, upper_bound_nonadaptive
from src.bounds.converse import lower_bound_adaptive
from src.bounds.ensemble import ensemble_length_bound, level_acceptance_lower_bound
from src.core.errors import InvalidParameterError


# ==================== upper_bound_nonadaptive Tests ====================

def test_upper_bound_examples():
    """Test direct evaluation of the closed form"""
    assert upper_bound_nonadaptive(6, 1, 2) == pytest.approx(30 * 3 * 24 ** (1 / 3))
    assert upper_bound_nonadaptive(6, 1, 2) == pytest.approx(259.605, abs=1e-3)
    assert upper_bound_nonadaptive(12, 2, 3) == pytest.approx(210 * 1782 ** (1 / 7))


def test_upper_bound_r_zero():
    assert upper_bound_nonadaptive(9, 0, 4) == pytest.approx(30.0)


def test_log_upper_bound_consistent():
    assert math.exp(log_upper_bound_nonadaptive(12, 2, 3)) == pytest.approx(upper_bound_nonadaptive(12, 2, 3))


def test_upper_bound_rejects_invalid():
    with pytest.raises(InvalidParameterError):
        upper_bound_nonadaptive(5, 6, 1)
    with pytest.raises(InvalidParameterError):
        upper_bound_nonadaptive(5, 1, 0)


def test_lower_below_upper_on_random_grid():
    """Test lower_bound_adaptive <= upper_bound_nonadaptive on 100 random points"""
    rng = np.random.default_rng(2024)
    for _ in range(100):
        n = int(rng.integers(1, 5000))
        r = int(rng.integers(0, min(n, 50) + 1))
        d = int(rng.integers(1, 20))
        assert lower_bound_adaptive(n, r, d) <= upper_bound_nonadaptive(n, r, d)


# ==================== ensemble_length_bound Tests ====================

def test_ensemble_r_zero():
    assert ensemble_length_bound(12, 0, 3) == 1.0


def test_ensemble_between_min_level_and_closed_form():
    """Test the ensemble bound is tighter than the closed form"""
    for n, r, d in [(12, 2, 3), (6, 1, 1), (8, 2, 2), (100, 2, 2)]:
        value = ensemble_length_bound(n, r, d)
        assert r * d + 1 <= value <= upper_bound_nonadaptive(n, r, d)


def test_level_acceptance_probability_range():
    for k in range(7, 40):
        p = level_acceptance_lower_bound(12, 2, 3, k)
        assert 0.0 <= p <= 1.0
    assert level_acceptance_lower_bound(12, 2, 3, 7) == 0.0


def test_ensemble_falls_back_when_not_converging(monkeypatch, caplog):
    """Test the iteration cap falls back to the closed form with a warning"""
    monkeypatch.setattr(ensemble, 'ENSEMBLE_MAX_LEVELS', 3)
    with caplog.at_level(logging.WARNING):
        value = ensemble_length_bound(12, 2, 3)
    assert value == pytest.approx(upper_bound_nonadaptive(12, 2, 3))
    assert 'did not converge' in caplog.text


def test_ensemble_falls_back_beyond_exact_limit(caplog):
    with caplog.at_level(logging.WARNING):
        value = ensemble_length_bound(10**6, 2000, 2)
    assert value == pytest.approx(upper_bound_nonadaptive(10**6, 2000, 2))
    assert 'exceeds' in caplog.text


def test_ensemble_skips_levels_too_small_for_a_support():
    """Test levels below the first one holding r indices only add their count"""
    assert ensemble_length_bound(12, 2, 3) > 8
