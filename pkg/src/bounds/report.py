"""
Bounds report: every bound for one (n, r, d, eps) in a single record.

Usage:
    from src.bounds.report import bounds_report

    report = bounds_report(12, 2, 3)
    report.M, report.lower_lym      # 3, 2.0
    report.to_dict()                # stable JSON field names
"""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

from src.bounds.achievability import upper_bound_nonadaptive
from src.bounds.converse import greedy_lower_bound, lower_bound_adaptive, lym_lower_bound
from src.bounds.ensemble import ensemble_length_bound
from src.combinatorics.binomial import log2_binom, log_binom
from src.core.errors import BoundUnavailable
from src.utils.error_utils import safe_execute
from src.utils.log_utils import log_operation_complete
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class BoundsReport:
    """
    All bounds for one parameter point.

    Attributes:
        n, r, d: Code parameters
        block_error_eps: Block-error rate the lower bounds are evaluated at
        entropy_bits: log2 C(n, r), also the competitive-ratio denominator
        lower_adaptive: Closed-form lower bound on E[l] (may be negative)
        M: Exact counting prefix, None when unavailable
        M_available: Whether M (and the bounds derived from it) were computed
        lower_lym: (M+1)/2, None when unavailable
        greedy_lower: Greedy-distribution lower bound, None when unavailable
        upper_nonadaptive: Closed-form upper bound of the construction
        ensemble_upper: Codebook-ensemble upper bound
        reference_scale: r d C(n,r)^(1/(rd+1)), the growth rate of optimal codes
    """
    n: int
    r: int
    d: int
    block_error_eps: float
    entropy_bits: float
    lower_adaptive: float
    M: Optional[int]
    M_available: bool
    lower_lym: Optional[float]
    greedy_lower: Optional[float]
    upper_nonadaptive: float
    ensemble_upper: float
    reference_scale: float

    @property
    def competitive_denominator_bits(self) -> float:
        return self.entropy_bits

    def best_lower(self) -> float:
        """Largest available lower bound on E[l]."""
        candidates = [self.lower_adaptive, self.lower_lym, self.greedy_lower]
        return max(c for c in candidates if c is not None)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['competitive_denominator_bits'] = self.competitive_denominator_bits
        return data


def competitive_ratio(mean_length: float, n: int, r: int) -> float:
    """
    mean_length / log2 C(n, r); +inf when C(n, r) = 1.

    Examples:
        >>> competitive_ratio(6.044, 12, 2) < 1.001
        True
    """
    bits = log2_binom(n, r)
    if bits == 0:
        return math.inf
    return mean_length / bits


def reference_scale(n: int, r: int, d: int) -> float:
    """r d C(n, r)^(1/(rd+1))."""
    if r == 0:
        return 0.0
    return r * d * math.exp(log_binom(n, r) / (r * d + 1))


def bounds_report(n: int, r: int, d: int, eps: float = 0.0) -> BoundsReport:
    """
    Evaluate every bound at (n, r, d, eps).

    The exact counting bounds are reported as unavailable (WARNING logged)
    when C(n, r) is beyond the exact-arithmetic limits.

    Raises:
        InvalidParameterError: On invalid ranges
    """
    lower = lower_bound_adaptive(n, r, d, eps)
    lym = safe_execute(lym_lower_bound, n, r, d, eps, default=None, logger=logger,
                       context='Counting bound unavailable', catch=(BoundUnavailable,))
    greedy = None
    if lym is not None:
        greedy = greedy_lower_bound(n, r, d, eps)

    report = BoundsReport(
        n=n,
        r=r,
        d=d,
        block_error_eps=float(eps),
        entropy_bits=log2_binom(n, r),
        lower_adaptive=lower,
        M=lym[0] if lym else None,
        M_available=lym is not None,
        lower_lym=lym[1] if lym else None,
        greedy_lower=greedy,
        upper_nonadaptive=upper_bound_nonadaptive(n, r, d),
        ensemble_upper=ensemble_length_bound(n, r, d),
        reference_scale=reference_scale(n, r, d),
    )
    log_operation_complete(logger, 'Bounds report', status='info', level=logging.DEBUG,
                           n=n, r=r, d=d, eps=eps, M=report.M)
    return report


__all__ = ['BoundsReport', 'bounds_report', 'competitive_ratio', 'reference_scale']
