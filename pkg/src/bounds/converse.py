"""
Lower bounds on the expected codeword length of any (r, d, n) code.

Single Responsibility: Converse-side numbers
- lower_bound_adaptive: closed-form bound valid even for adaptive decoders
- max_codewords_of_length / lym_lower_bound: exact antichain counting bound
- greedy_lower_bound: expected length of the length-greedy distribution
- capacity_sum_check: the partial-sum inequality behind the closed form

Every bound accepts a block-error rate eps in [0, 1): the number of source
words that must be decodable becomes (1 - eps) * C(n, r).

Exact integers decide M; floats are used only for the closed forms.
"""

import math
from fractions import Fraction
from typing import Tuple

from src.combinatorics.binomial import binom_exact, log_binom
from src.core.constants import EXACT_BIT_LIMIT, CAPACITY_RELATIVE_SLACK, LYM_MAX_LEVELS
from src.core.errors import BoundUnavailable, InvalidParameterError
from src.utils.logger import get_logger
from src.utils.validation_utils import (
    check_code_parameters,
    raise_if_invalid,
    validate_all,
    validate_integer,
    validate_probability,
    validate_value_range,
)

logger = get_logger(__name__)


def _check(n: int, r: int, d: int, eps: float) -> Tuple[int, int, int]:
    n, r, d = check_code_parameters(n, r, d)
    raise_if_invalid(validate_probability(eps))
    return n, r, d


def adaptive_product_term(n: int, r: int, d: int, eps: float = 0.0) -> float:
    """
    ((rd+1)/(4e)) * (((1-eps) C(n,r))^(1/(rd+1)) - 1), in log space.

    Tends to ln C(n,r) / (4e) as d grows.
    """
    n, r, d = _check(n, r, d, eps)
    log_target = log_binom(n, r) + math.log1p(-eps)
    m = r * d + 1
    return m / (4 * math.e) * math.expm1(log_target / m)


def lower_bound_adaptive(n: int, r: int, d: int, eps: float = 0.0) -> float:
    """
    Lower bound on E[l] for any adaptive code with block-error rate eps.

    Examples:
        >>> round(lower_bound_adaptive(12, 2, 3), 4)
        -0.4725
    """
    return adaptive_product_term(n, r, d, eps) - 1.0


def max_codewords_of_length(k: int, rd: int) -> int:
    """
    Most source words that can share codeword length k: C(2k, min(k, rd)).

    Examples:
        >>> max_codewords_of_length(3, 6)
        20
        >>> max_codewords_of_length(4, 6)
        70
    """
    raise_if_invalid(validate_all([
        validate_integer(k, 'k'),
        validate_integer(rd, 'rd'),
    ]))
    raise_if_invalid(validate_all([
        validate_value_range(k, 1, None, 'k'),
        validate_value_range(rd, 0, None, 'rd'),
    ]))
    return binom_exact(2 * k, min(k, rd))


def decodable_target(n: int, r: int, eps: float = 0.0) -> int:
    """
    floor((1 - eps) * C(n, r)) with eps taken as an exact rational.

    Raises:
        BoundUnavailable: If C(n, r) exceeds the exact-arithmetic limit
    """
    total = binom_exact(n, r)
    if total.bit_length() > EXACT_BIT_LIMIT:
        raise BoundUnavailable(
            f"C({n},{r}) has {total.bit_length()} bits (limit {EXACT_BIT_LIMIT})"
        )
    scaled = (1 - Fraction(eps)) * total
    return scaled.numerator // scaled.denominator


def _capacity_prefix(target: int, rd: int) -> Tuple[int, int]:
    """Largest M with sum_{k<=M} capacity(k) <= target, and that sum."""
    M = 0
    total = 0
    while True:
        if M >= LYM_MAX_LEVELS:
            raise BoundUnavailable(f"M exceeds {LYM_MAX_LEVELS} levels")
        step = binom_exact(2 * (M + 1), min(M + 1, rd))
        if total + step > target:
            return M, total
        total += step
        M += 1


def lym_lower_bound(n: int, r: int, d: int, eps: float = 0.0) -> Tuple[int, float]:
    """
    (M, (M+1)/2) where M is the largest prefix of lengths whose total
    codeword capacity stays within (1 - eps) * C(n, r).

    Raises:
        InvalidParameterError: On invalid ranges
        BoundUnavailable: Beyond the exact-arithmetic limits

    Examples:
        >>> lym_lower_bound(12, 2, 3)
        (3, 2.0)
        >>> lym_lower_bound(7, 0, 3)
        (0, 0.5)
    """
    n, r, d = _check(n, r, d, eps)
    target = decodable_target(n, r, eps)
    # a single decodable word needs no length prefix
    if target <= 1:
        return 0, 0.5
    M, _ = _capacity_prefix(target, r * d)
    return M, (M + 1) / 2


def greedy_lower_bound(n: int, r: int, d: int, eps: float = 0.0) -> float:
    """
    Expected length when lengths 1..M are filled to capacity and the rest
    of the decodable words sit at length M+1. Never below (M+1)/2.

    Examples:
        >>> greedy_lower_bound(12, 2, 3) == 226 / 66
        True
    """
    n, r, d = _check(n, r, d, eps)
    target = decodable_target(n, r, eps)
    if target == 0:
        return 1.0

    M, filled = _capacity_prefix(target, r * d)
    weighted = sum(k * binom_exact(2 * k, min(k, r * d)) for k in range(1, M + 1))
    expected = Fraction(weighted + (M + 1) * (target - filled), target)
    return float(expected)


def capacity_sum_check(M: int, v: int) -> bool:
    """
    sum_{k=1}^{M} max_{i<=v} C(2k, i) <= 2^v (M + 2 + (v+1)/(2e))^(v+1) / (v+1)!

    Left side exact; right side in log space with a small relative slack
    in favour of the left side.

    Raises:
        InvalidParameterError: Unless M >= 1 and v >= 1

    Examples:
        >>> capacity_sum_check(1, 1)
        True
    """
    if M < 1 or v < 1:
        raise InvalidParameterError(f"capacity_sum_check needs M, v >= 1, got M={M}, v={v}")

    lhs = sum(binom_exact(2 * k, min(k, v)) for k in range(1, M + 1))
    log_rhs = (v * math.log(2)
               + (v + 1) * math.log(M + 2 + (v + 1) / (2 * math.e))
               - math.lgamma(v + 2))
    return math.log(lhs) <= log_rhs + math.log1p(CAPACITY_RELATIVE_SLACK)


__all__ = [
    'adaptive_product_term',
    'lower_bound_adaptive',
    'max_codewords_of_length',
    'decodable_target',
    'lym_lower_bound',
    'greedy_lower_bound',
    'capacity_sum_check',
]
