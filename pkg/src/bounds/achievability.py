"""
Upper bound of the random non-adaptive construction.

    E[l] <= 30 (rd+1) ((r+1)^(r+1) C(n,r))^(1/(rd+1))

evaluated in log space so it stays finite for huge C(n, r).
"""

import math

from src.combinatorics.binomial import log_binom
from src.core.constants import ACHIEVABILITY_CONSTANT
from src.utils.validation_utils import check_code_parameters


def log_upper_bound_nonadaptive(n: int, r: int, d: int) -> float:
    """Natural log of upper_bound_nonadaptive."""
    n, r, d = check_code_parameters(n, r, d)
    exponent = 1.0 / (r * d + 1)
    log_inner = (r + 1) * math.log(r + 1) + log_binom(n, r)
    return math.log(ACHIEVABILITY_CONSTANT) + math.log(r * d + 1) + exponent * log_inner


def upper_bound_nonadaptive(n: int, r: int, d: int) -> float:
    """
    Expected-length upper bound of the construction.

    r = 0 evaluates the same formula and gives 30.

    Raises:
        InvalidParameterError: Unless 0 <= r <= n and d >= 1

    Examples:
        >>> round(upper_bound_nonadaptive(6, 1, 2), 3)
        259.605
    """
    return math.exp(log_upper_bound_nonadaptive(n, r, d))


__all__ = ['upper_bound_nonadaptive', 'log_upper_bound_nonadaptive']
