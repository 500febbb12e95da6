"""
Bound sandwich: is a measured mean length consistent with the bounds?

Three checks, each with SANDWICH_SIGMAS standard errors of slack:
- counting bound: mean + slack >= (M+1)/2 (skipped when M is unavailable)
- adaptive bound: mean + 1 + slack >= the product term
- construction bound: mean - slack <= upper_bound_nonadaptive
"""

import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from src.bounds.achievability import upper_bound_nonadaptive
from src.bounds.converse import adaptive_product_term, lym_lower_bound
from src.coding.types import CodeParams
from src.core.constants import SANDWICH_SIGMAS
from src.core.errors import BoundUnavailable
from src.execution.monte_carlo import LengthStats
from src.utils.error_utils import safe_execute
from src.utils.log_utils import log_validation_result
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class SandwichResult:
    """
    Attributes:
        mean: Measured mean length
        slack: SANDWICH_SIGMAS standard errors of the mean
        lym_lower: (M+1)/2, None when unavailable
        adaptive_term: Right side of the adaptive bound on E[l] + 1
        upper: Closed-form upper bound of the construction
        lym_ok: None when the counting bound was unavailable
        adaptive_ok, upper_ok: Individual check outcomes
    """
    mean: float
    slack: float
    lym_lower: Optional[float]
    adaptive_term: float
    upper: float
    lym_ok: Optional[bool]
    adaptive_ok: bool
    upper_ok: bool

    @property
    def passed(self) -> bool:
        return self.lym_ok is not False and self.adaptive_ok and self.upper_ok

    def failures(self) -> List[str]:
        messages = []
        if self.lym_ok is False:
            messages.append(f"mean {self.mean:.4f} below counting bound {self.lym_lower}")
        if not self.adaptive_ok:
            messages.append(f"mean + 1 = {self.mean + 1:.4f} below adaptive bound {self.adaptive_term:.4f}")
        if not self.upper_ok:
            messages.append(f"mean {self.mean:.4f} above upper bound {self.upper:.4f}")
        return messages

    def to_dict(self) -> Dict[str, Any]:
        data = dict(self.__dict__)
        data['passed'] = self.passed
        return data


def sandwich_check(params: CodeParams, stats: LengthStats, eps: float = 0.0,
                   sigmas: float = SANDWICH_SIGMAS) -> SandwichResult:
    """
    Check stats.mean against every bound for params.

    Raises:
        InvalidParameterError: If eps is outside [0, 1)
    """
    n, r, d = params.n, params.r, params.d
    slack = sigmas * stats.stddev / math.sqrt(stats.trials)
    lym = safe_execute(lym_lower_bound, n, r, d, eps, default=None, logger=logger,
                       context='Counting bound skipped', catch=(BoundUnavailable,))
    lym_lower = lym[1] if lym else None
    term = adaptive_product_term(n, r, d, eps)
    upper = upper_bound_nonadaptive(n, r, d)

    result = SandwichResult(
        mean=stats.mean,
        slack=slack,
        lym_lower=lym_lower,
        adaptive_term=term,
        upper=upper,
        lym_ok=None if lym_lower is None else stats.mean + slack >= lym_lower,
        adaptive_ok=stats.mean + 1 + slack >= term,
        upper_ok=stats.mean - slack <= upper,
    )
    log_validation_result(logger, result.passed, f'Bound sandwich (n={n}, r={r}, d={d})',
                          errors=result.failures())
    return result


__all__ = ['SandwichResult', 'sandwich_check']
