"""
Scaling experiment: growth exponent of the expected length in n.

For fixed (r, d) the mean codeword length grows like n^(r/(rd+1)). The
experiment estimates the mean at every n of a grid and fits a least-squares
line to (log2 n, log2 mean).

Usage:
    from src.execution.scaling import scaling_experiment

    result = scaling_experiment(1, 1, [256, 1024, 4096, 16384], trials=2000, master_seed=0)
    result.slope, result.target_exponent    # ~0.5, 0.5
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from src.coding.types import CodeParams
from src.core.constants import DEFAULT_MASTER_SEED, MIN_SCALING_POINTS
from src.core.errors import InvalidParameterError
from src.core.results import ExecutionMetrics
from src.execution.monte_carlo import LengthStats, mc_expected_length
from src.utils.error_utils import error_context
from src.utils.log_utils import log_operation_complete, log_operation_start, log_progress
from src.utils.logger import get_logger
from src.utils.validation_utils import raise_if_invalid, validate_list_not_empty

logger = get_logger(__name__)


@dataclass(frozen=True)
class ScalingPoint:
    n: int
    stats: LengthStats

    @property
    def log2_n(self) -> float:
        return math.log2(self.n)

    @property
    def log2_mean(self) -> float:
        return math.log2(self.stats.mean)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'trials': self.stats.trials,
            'mean': self.stats.mean,
            'ci95_halfwidth': self.stats.ci95_halfwidth,
            'log2_n': self.log2_n,
            'log2_mean': self.log2_mean,
        }


@dataclass(frozen=True)
class ScalingResult:
    """
    Fitted log-log slope for one (r, d).

    Attributes:
        r, d: Fixed sparsity and probe budget
        slope: Least-squares slope of log2(mean) against log2(n)
        intercept: Intercept of the same fit
        target_exponent: r / (r d + 1)
        points: One ScalingPoint per grid value
    """
    r: int
    d: int
    slope: float
    intercept: float
    target_exponent: float
    points: List[ScalingPoint] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'r': self.r,
            'd': self.d,
            'slope': self.slope,
            'intercept': self.intercept,
            'target_exponent': self.target_exponent,
            'points': [p.to_dict() for p in self.points],
        }


def _check_grid(n_grid: Sequence[int]) -> List[int]:
    raise_if_invalid(validate_list_not_empty(list(n_grid), 'n_grid', min_length=MIN_SCALING_POINTS))
    grid = [int(n) for n in n_grid]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise InvalidParameterError(f"n_grid must be strictly ascending, got {grid}")
    return grid


def scaling_experiment(r: int, d: int, n_grid: Sequence[int], trials: int,
                       master_seed: Optional[int] = None) -> ScalingResult:
    """
    Estimate the mean length on each n of the grid and fit the growth exponent.

    Every grid point uses its own codebook CodeParams(n, r, d, master_seed)
    and the same trial stream seed.

    Raises:
        InvalidParameterError: If the grid has fewer than two points or is not ascending
        SearchCapExceeded: Propagated from any grid point
    """
    grid = _check_grid(n_grid)
    seed = DEFAULT_MASTER_SEED if master_seed is None else master_seed

    log_operation_start(logger, 'Scaling experiment', r=r, d=d, grid=grid, trials=trials)
    metrics = ExecutionMetrics.start('scaling_experiment')
    points = []
    with error_context('Scaling experiment', logger=logger):
        for number, n in enumerate(grid, start=1):
            log_progress(logger, number, len(grid), item_name='grid point')
            params = CodeParams(n=n, r=r, d=d, master_seed=seed)
            points.append(ScalingPoint(n, mc_expected_length(params, trials, seed)))

    x = np.array([p.log2_n for p in points])
    y = np.array([p.log2_mean for p in points])
    slope, intercept = np.polyfit(x, y, 1)

    result = ScalingResult(
        r=r,
        d=d,
        slope=float(slope),
        intercept=float(intercept),
        target_exponent=r / (r * d + 1),
        points=points,
    )
    metrics.complete(items_processed=len(grid) * trials)
    log_operation_complete(logger, 'Scaling experiment', slope=round(result.slope, 4),
                           target=round(result.target_exponent, 4),
                           seconds=round(metrics.duration_seconds, 2))
    return result


__all__ = ['ScalingPoint', 'ScalingResult', 'scaling_experiment']
