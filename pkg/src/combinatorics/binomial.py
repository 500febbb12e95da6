"""
Exact and log-space binomial coefficients.

Single Responsibility: Binomial arithmetic shared by the codebook and bounds
- binom_exact: arbitrary-precision C(n, k), 0 outside 0 <= k <= n
- log_binom: natural log of C(n, k) for reporting and very large parameters
- log2_binom: base-2 variant (entropy of a uniform r-sparse source)

Exact integers are used for every comparison that decides a bound; floats
only for reporting and for parameters whose C(n, r) is too large to handle
exactly.

Usage:
    from src.combinatorics.binomial import binom_exact, log_binom

    binom_exact(12, 2)    # 66
    log_binom(10**6, 10)  # ln C(10^6, 10)
"""

import math
from functools import lru_cache

from scipy.special import xlog1py, xlogy

from src.core.errors import InvalidParameterError

# Up to this n the log is taken of the exact big integer
_EXACT_LOG_LIMIT = 10_000

# Up to this many factors the product form is summed term by term
_PRODUCT_TERMS_LIMIT = 1_000


@lru_cache(maxsize=65536)
def binom_exact(n: int, k: int) -> int:
    """
    C(n, k) as an exact integer.

    Returns 0 when k < 0 or k > n.

    Raises:
        InvalidParameterError: If n < 0

    Examples:
        >>> binom_exact(12, 2)
        66
        >>> binom_exact(7, 9)
        0
    """
    if n < 0:
        raise InvalidParameterError(f"binom_exact needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _stirling_tail(m: int) -> float:
    """ln m! - (m ln m - m + ln(2 pi m) / 2), accurate for m > _PRODUCT_TERMS_LIMIT."""
    inv = 1.0 / m
    inv2 = inv * inv
    return inv * (1 / 12 - inv2 * (1 / 360 - inv2 * (1 / 1260 - inv2 / 1680)))


def _stirling_log_binom(n: int, k: int) -> float:
    # k <= n - k here; the m ln m and m terms of the three factorials
    # are combined analytically, leaving only non-negative main terms.
    ratio = k / n
    main = float(xlogy(float(k), n / k) - xlog1py(float(n - k), -ratio))
    correction = -0.5 * math.log1p(-ratio) - 0.5 * math.log(2 * math.pi * k)
    tails = _stirling_tail(n) - _stirling_tail(n - k) - _stirling_tail(k)
    return main + correction + tails


def log_binom(n: int, k: int) -> float:
    """
    ln C(n, k).

    Small n are evaluated from the exact integer, few-factor products by a
    compensated sum of logs and everything else by a Stirling difference
    written without cancelling terms (relative error below 1e-12).

    Raises:
        InvalidParameterError: If k < 0 or k > n

    Examples:
        >>> round(log_binom(12, 2), 5)
        4.18965
        >>> log_binom(5, 0)
        0.0
    """
    if n < 0 or k < 0 or k > n:
        raise InvalidParameterError(f"log_binom needs 0 <= k <= n, got n={n}, k={k}")

    k = min(k, n - k)
    if k == 0:
        return 0.0
    if n <= _EXACT_LOG_LIMIT:
        return math.log(math.comb(n, k))
    if k <= _PRODUCT_TERMS_LIMIT:
        numerator = math.fsum(math.log(n - i) for i in range(k))
        return numerator - math.lgamma(k + 1)
    return _stirling_log_binom(n, k)


def log2_binom(n: int, k: int) -> float:
    """
    log2 C(n, k).

    Examples:
        >>> round(log2_binom(12, 2), 3)
        6.044
    """
    return log_binom(n, k) / math.log(2)


__all__ = ['binom_exact', 'log_binom', 'log2_binom']
