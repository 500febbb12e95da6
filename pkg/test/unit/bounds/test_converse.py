"""
Tests for src/bounds/converse.py
"""

import math

import pytest

from src.bounds.converse import (
    adaptive_product_term,
    capacity_sum_check,
    decodable_target,
    greedy_lower_bound,
    lower_bound_adaptive,
    lym_lower_bound,
    max_codewords_of_length,
)
from src.combinatorics.binomial import log_binom
from src.core.errors import BoundUnavailable, InvalidParameterError


# ==================== lower_bound_adaptive Tests ====================

def test_lower_bound_adaptive_small_instance():
    """Test direct evaluation at (12, 2, 3)"""
    expected = 7 / (4 * math.e) * (66 ** (1 / 7) - 1) - 1
    assert lower_bound_adaptive(12, 2, 3) == pytest.approx(expected)
    assert round(lower_bound_adaptive(12, 2, 3), 4) == -0.4725


def test_product_term_large_d_limit():
    """Test the product term tends to ln C(n,r) / (4e)"""
    limit = log_binom(20, 3) / (4 * math.e)
    assert adaptive_product_term(20, 3, 10**6) == pytest.approx(limit, rel=1e-3)


def test_singleton_target_gives_minus_one():
    """Test C(n,r) = 1 makes the product term vanish"""
    assert adaptive_product_term(5, 5, 2) == 0.0
    assert lower_bound_adaptive(5, 0, 2) == -1.0


@pytest.mark.parametrize('r,d,eps', [(1, 1, 0.0), (2, 3, 0.0), (3, 2, 0.5), (0, 2, 0.0)])
def test_lower_bound_adaptive_non_decreasing_in_n(r, d, eps):
    """Test the bound never drops as n grows with r, d, eps fixed"""
    grid = list(range(max(r, 1), 201)) + [10**3, 10**4, 10**5, 10**6, 10**9]
    values = [lower_bound_adaptive(n, r, d, eps) for n in grid]
    assert all(b >= a for a, b in zip(values, values[1:]))


def test_lower_bound_adaptive_rejects_bad_eps():
    with pytest.raises(InvalidParameterError):
        lower_bound_adaptive(12, 2, 3, 1.0)
    with pytest.raises(InvalidParameterError):
        lower_bound_adaptive(12, 2, 3, -0.1)


def test_lower_bound_adaptive_huge_parameters_finite():
    """Test log-space evaluation for C(n, r) far beyond float range"""
    value = lower_bound_adaptive(10**6, 500, 2)
    assert math.isfinite(value) and value > 0


# ==================== max_codewords_of_length Tests ====================

def test_max_codewords_of_length():
    assert max_codewords_of_length(3, 6) == 20
    assert max_codewords_of_length(4, 6) == 70
    assert max_codewords_of_length(1, 1) == 2
    assert max_codewords_of_length(5, 2) == math.comb(10, 2)


def test_max_codewords_of_length_rejects_bad_input():
    with pytest.raises(InvalidParameterError):
        max_codewords_of_length(0, 3)
    with pytest.raises(InvalidParameterError):
        max_codewords_of_length(3, -1)


# ==================== lym_lower_bound Tests ====================

def test_lym_lower_bound_small_instance():
    """Test partial sums 2, 8, 28 <= 66 < 98"""
    assert lym_lower_bound(12, 2, 3) == (3, 2.0)


def test_lym_lower_bound_single_word():
    """Test C(n,r) = 1 gives M = 0 at r = 0 and at r = n"""
    assert lym_lower_bound(7, 0, 3) == (0, 0.5)
    assert lym_lower_bound(5, 5, 2) == (0, 0.5)
    assert greedy_lower_bound(7, 0, 3) >= 0.5


def test_lym_lower_bound_half_target():
    """Test eps = 0.5 gives target 33 and the same M"""
    assert decodable_target(12, 2, 0.5) == 33
    assert lym_lower_bound(12, 2, 3, 0.5) == (3, 2.0)


def test_lym_lower_bound_unavailable_beyond_exact_limit():
    with pytest.raises(BoundUnavailable):
        lym_lower_bound(10**6, 2000, 2)


def test_decodable_target_floor():
    assert decodable_target(12, 2) == 66
    assert decodable_target(12, 2, 0.9) == 6


# ==================== greedy_lower_bound Tests ====================

def test_greedy_lower_bound_small_instance():
    assert greedy_lower_bound(12, 2, 3) == pytest.approx(226 / 66)


def test_greedy_not_below_lym():
    for n, r, d in [(6, 1, 1), (8, 2, 2), (10, 3, 2), (30, 2, 3)]:
        _, lym = lym_lower_bound(n, r, d)
        assert greedy_lower_bound(n, r, d) >= lym


# ==================== monotonicity in eps ====================

def test_bounds_non_increasing_in_eps():
    """Test both lower bounds shrink as the block-error rate grows"""
    grid = [i / 10 for i in range(10)]
    for n, r, d in [(12, 2, 3), (30, 3, 2), (100, 2, 1)]:
        adaptive = [lower_bound_adaptive(n, r, d, eps) for eps in grid]
        lym = [lym_lower_bound(n, r, d, eps)[1] for eps in grid]
        assert all(b <= a for a, b in zip(adaptive, adaptive[1:]))
        assert all(b <= a for a, b in zip(lym, lym[1:]))


# ==================== capacity_sum_check Tests ====================

def test_capacity_sum_check_examples():
    assert capacity_sum_check(1, 1) is True
    assert capacity_sum_check(3, 6) is True


def test_capacity_sum_check_grid():
    """Test the inequality for every (M, v) in [1, 50]^2"""
    for M in range(1, 51):
        for v in range(1, 51):
            assert capacity_sum_check(M, v), (M, v)


def test_capacity_sum_check_rejects_zero():
    with pytest.raises(InvalidParameterError):
        capacity_sum_check(0, 1)
