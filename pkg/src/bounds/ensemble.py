"""
Expected length of the random codebook ensemble, bounded from above.

For a fixed source word, levels are independent and level k accepts with
probability at least

    p_k = C(|S_k|, r) / C(n, r) * max(0, 1 - |S_k| C(rd, d) / C(k, d))

so E[l] <= (k_min - 1) + sum_{k >= k_min} prod_{j < k} (1 - p_j).
Levels with |S_k| < r have p_k = 0 and are counted in one step. The sum
stops once the survival product drops below a tolerance at level K and the
remainder is bounded geometrically by Q_K / q, where
q = C(|S_K|, r) / ((r+1) C(n, r)) lower-bounds every later p_k.
"""

import math

from src.bounds.achievability import upper_bound_nonadaptive
from src.coding.levels import level_size, min_level
from src.combinatorics.binomial import binom_exact, log2_binom, log_binom
from src.core.constants import ENSEMBLE_MAX_LEVELS, ENSEMBLE_SURVIVAL_TOL, EXACT_BIT_LIMIT
from src.utils.logger import get_logger
from src.utils.validation_utils import check_code_parameters

logger = get_logger(__name__)


def _containment_probability(n: int, r: int, size: int) -> float:
    if size < r:
        return 0.0
    return math.exp(log_binom(size, r) - log_binom(n, r))


def _first_level_holding(n: int, r: int, d: int) -> int:
    """Smallest k with |S_k| >= r."""
    lo = min_level(r, d)
    if level_size(n, r, d, lo) >= r:
        return lo
    hi = 2 * lo
    while level_size(n, r, d, hi) < r:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if level_size(n, r, d, mid) >= r:
            hi = mid
        else:
            lo = mid
    return hi


def level_acceptance_lower_bound(n: int, r: int, d: int, k: int) -> float:
    """p_k: lower bound on the chance that level k accepts a fixed word."""
    size = level_size(n, r, d, k)
    collision = size * binom_exact(r * d, d) / binom_exact(k, d)
    return _containment_probability(n, r, size) * max(0.0, 1.0 - collision)


def _fallback(n: int, r: int, d: int, reason: str) -> float:
    logger.warning(f"Ensemble bound for (n={n}, r={r}, d={d}) {reason}; "
                   f"using the closed-form upper bound")
    return upper_bound_nonadaptive(n, r, d)


def ensemble_length_bound(n: int, r: int, d: int) -> float:
    """
    Upper bound on the codebook-averaged expected codeword length.

    Falls back to upper_bound_nonadaptive (logged) when C(n, r) is beyond
    the exact-arithmetic limit or the survival product does not vanish
    within the iteration cap.

    Examples:
        >>> ensemble_length_bound(12, 0, 3)
        1.0
    """
    n, r, d = check_code_parameters(n, r, d)
    if r == 0:
        return 1.0
    if log2_binom(n, r) > EXACT_BIT_LIMIT:
        return _fallback(n, r, d, f"exceeds {EXACT_BIT_LIMIT} bits")

    k = _first_level_holding(n, r, d)
    expected = float(k - 1)
    survival = 1.0
    steps = 0
    while survival >= ENSEMBLE_SURVIVAL_TOL:
        if steps >= ENSEMBLE_MAX_LEVELS:
            return _fallback(n, r, d, f"did not converge in {ENSEMBLE_MAX_LEVELS} levels")
        expected += survival
        survival *= 1.0 - level_acceptance_lower_bound(n, r, d, k)
        k += 1
        steps += 1

    q = _containment_probability(n, r, level_size(n, r, d, k)) / (r + 1)
    return expected + survival / q


__all__ = ['ensemble_length_bound', 'level_acceptance_lower_bound']
