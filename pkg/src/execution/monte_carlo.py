"""
Monte Carlo estimate of the expected codeword length.

Single Responsibility: Sample source words, encode them, aggregate lengths
- Trial t draws its support with sample_subset(n, r, SampleKey.trial(seed, t))
- Lengths are summed as exact integers; the mean is total / trials
- Search-cap overflows are counted over the whole run, then reported as a failure

Usage:
    from src.execution.monte_carlo import mc_expected_length

    stats = mc_expected_length(CodeParams(n=12, r=2, d=3), trials=10_000, master_seed=0)
    stats.mean, stats.ci95_halfwidth
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.bounds.report import competitive_ratio
from src.coding.codebook import Codebook, get_codebook
from src.coding.codec import encode
from src.coding.types import CodeParams, SparseSeq
from src.combinatorics.prf import SampleKey
from src.combinatorics.sampling import sample_subset
from src.core.errors import InvalidParameterError, SearchCapExceeded
from src.core.results import ExecutionMetrics
from src.execution.statistics import IntegerAccumulator
from src.utils.error_utils import error_context
from src.utils.log_utils import log_count_summary, log_operation_complete, log_operation_start
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class LengthStats:
    """
    Summary of sampled codeword lengths.

    Attributes:
        trials: Number of encoded words
        mean: total_length / trials
        stddev: Sample standard deviation
        ci95_halfwidth: Normal-approximation half width of the mean's interval
        min: Shortest codeword seen
        max: Longest codeword seen
        histogram: length -> count, ascending by length
        total_length: Exact sum of all lengths
        competitive_ratio: mean / log2 C(n, r) (diagnostic)
    """
    trials: int
    mean: float
    stddev: float
    ci95_halfwidth: float
    min: int
    max: int
    histogram: Dict[int, int] = field(default_factory=dict)
    total_length: int = 0
    competitive_ratio: float = 0.0

    @classmethod
    def from_accumulator(cls, acc: IntegerAccumulator, n: int, r: int) -> 'LengthStats':
        mean = float(acc.mean)
        return cls(
            trials=acc.count,
            mean=mean,
            stddev=acc.stddev,
            ci95_halfwidth=acc.ci_halfwidth(),
            min=min(acc.histogram),
            max=max(acc.histogram),
            histogram=acc.sorted_histogram(),
            total_length=acc.total,
            competitive_ratio=competitive_ratio(mean, n, r),
        )

    @property
    def standard_error(self) -> float:
        return self.stddev / self.trials ** 0.5

    def to_dict(self) -> Dict[str, Any]:
        data = dict(self.__dict__)
        data['histogram'] = {str(k): v for k, v in self.histogram.items()}
        return data


def trial_support(params: CodeParams, master_seed: int, t: int) -> tuple:
    """Support drawn for trial t, uniform over the C(n, r) r-subsets."""
    return sample_subset(params.n, params.r, SampleKey.trial(master_seed, t))


def mc_expected_length(params: CodeParams, trials: int,
                       master_seed: Optional[int] = None,
                       codebook: Optional[Codebook] = None) -> LengthStats:
    """
    Estimate E[l(c(X))] for X uniform over r-subsets of [n].

    Args:
        params: Code parameters (master_seed fixes the codebook)
        trials: Number of sampled words, at least 1
        master_seed: Seed of the trial stream (defaults to params.master_seed)
        codebook: Optional codebook with a warm level cache

    Returns:
        LengthStats, identical for identical (params, trials, master_seed)

    Raises:
        InvalidParameterError: If trials < 1
        SearchCapExceeded: If any trial found no accepting level (first one re-raised
            after all trials ran and the overflow count was logged)
    """
    if trials < 1:
        raise InvalidParameterError(f"trials must be >= 1, got {trials}")
    seed = params.master_seed if master_seed is None else master_seed
    codebook = codebook or get_codebook(params)

    log_operation_start(logger, 'Monte Carlo length', n=params.n, r=params.r, d=params.d,
                        trials=trials, seed=seed)
    metrics = ExecutionMetrics.start('mc_expected_length')
    lengths = IntegerAccumulator()
    overflows: List[SearchCapExceeded] = []

    with error_context('Monte Carlo length', logger=logger):
        for t in range(trials):
            x = SparseSeq.from_support(params.n, trial_support(params, seed, t))
            try:
                lengths.add(encode(params, x, codebook).length)
            except SearchCapExceeded as e:
                overflows.append(e)

        if overflows:
            log_count_summary(logger, 'search-cap overflows', len(overflows),
                              items=[list(e.support) for e in overflows])
            raise overflows[0]

    stats = LengthStats.from_accumulator(lengths, params.n, params.r)
    metrics.complete(items_processed=trials)
    log_operation_complete(logger, 'Monte Carlo length', mean=round(stats.mean, 4),
                           ci95=round(stats.ci95_halfwidth, 4), levels=codebook.cached_levels(),
                           seconds=round(metrics.duration_seconds, 2))
    return stats


__all__ = ['LengthStats', 'trial_support', 'mc_expected_length']
