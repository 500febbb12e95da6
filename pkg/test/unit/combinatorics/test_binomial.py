"""
Tests for src/combinatorics/binomial.py
"""

import math

import pytest

from src.combinatorics.binomial import binom_exact, log2_binom, log_binom
from src.core.errors import InvalidParameterError


# ==================== binom_exact Tests ====================

def test_binom_exact_small_values():
    """Test closed-form values"""
    assert binom_exact(4, 2) == 6
    assert binom_exact(12, 2) == 66
    assert binom_exact(0, 0) == 1


def test_binom_exact_out_of_range_is_zero():
    """Test k outside [0, n] gives 0"""
    assert binom_exact(7, 9) == 0
    assert binom_exact(7, -1) == 0


def test_binom_exact_negative_n_raises():
    """Test n < 0 is a domain error"""
    with pytest.raises(InvalidParameterError):
        binom_exact(-1, 0)


def test_binom_exact_pascal_rule():
    """Test C(n,k) = C(n-1,k) + C(n-1,k-1) for every 0 < k < n <= 60"""
    for n in range(2, 61):
        for k in range(1, n):
            assert binom_exact(n, k) == binom_exact(n - 1, k) + binom_exact(n - 1, k - 1)


def test_binom_exact_big_integer():
    """Test values beyond 64 bits stay exact"""
    assert binom_exact(200, 100) == math.comb(200, 100)
    assert binom_exact(200, 100).bit_length() > 64


# ==================== log_binom Tests ====================

def test_log_binom_matches_exact():
    """Test ln C(12,2) = ln 66"""
    assert log_binom(12, 2) == pytest.approx(math.log(66))
    assert round(log_binom(12, 2), 5) == 4.18965


def test_log_binom_k_zero():
    """Test C(n,0) = 1 gives 0.0"""
    assert log_binom(5, 0) == 0.0
    assert log_binom(5, 5) == 0.0


def test_log_binom_large_n_product_branch():
    """Test n = 10^6, k = 10 against the big-integer log"""
    exact = math.log(math.comb(10**6, 10))
    assert log_binom(10**6, 10) == pytest.approx(exact, rel=1e-9)


def test_log_binom_large_k_stirling_branch():
    """Test the Stirling branch against the big-integer log"""
    exact = math.log(math.comb(50_000, 5_000))
    assert log_binom(50_000, 5_000) == pytest.approx(exact, rel=1e-12)


@pytest.mark.parametrize('n,k', [
    (10**9, 1_000),
    (10**9, 1_001),
    (10**9, 5_000),
    (10**9, 100_000),
    (10**6, 500_000),
    (10_001, 5_000),
])
def test_log_binom_relative_error_up_to_a_billion(n, k):
    """Test relative error <= 1e-12 on both large-n branches"""
    exact = math.log(math.comb(n, k))
    assert abs(log_binom(n, k) - exact) <= 1e-12 * exact


def test_log_binom_agrees_with_exact_up_to_200():
    """Test exp(log_binom) / binom_exact stays within 1 +- 1e-9 for every n <= 200"""
    for n in range(0, 201):
        for k in range(0, n + 1):
            ratio = math.exp(log_binom(n, k) - math.log(binom_exact(n, k)))
            assert abs(ratio - 1.0) <= 1e-9


def test_log_binom_out_of_range_raises():
    """Test k > n has no finite log"""
    with pytest.raises(InvalidParameterError):
        log_binom(3, 4)


def test_log2_binom():
    """Test base-2 variant"""
    assert log2_binom(12, 2) == pytest.approx(math.log2(66))
    assert log2_binom(4, 0) == 0.0
