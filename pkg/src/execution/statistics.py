"""
Sample statistics for Monte Carlo experiments.

Sums are accumulated as exact integers so the reported mean does not depend
on the order trials finish in; floats appear only in the final summary.
"""

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable

from scipy.stats import norm

from src.core.constants import CI_CONFIDENCE


def z_value(confidence: float = CI_CONFIDENCE) -> float:
    """Two-sided normal quantile, 1.96 for 95%."""
    return float(norm.ppf(0.5 + confidence / 2))


@dataclass
class IntegerAccumulator:
    """
    Exact running sums of integer observations.

    Attributes:
        count: Observations seen
        total: Sum of observations
        total_sq: Sum of squared observations
        histogram: value -> occurrences
    """
    count: int = 0
    total: int = 0
    total_sq: int = 0
    histogram: Counter = field(default_factory=Counter)

    def add(self, value: int) -> None:
        self.count += 1
        self.total += value
        self.total_sq += value * value
        self.histogram[value] += 1

    def extend(self, values: Iterable[int]) -> None:
        for value in values:
            self.add(value)

    def merge(self, other: 'IntegerAccumulator') -> None:
        self.count += other.count
        self.total += other.total
        self.total_sq += other.total_sq
        self.histogram.update(other.histogram)

    @property
    def mean(self) -> Fraction:
        return Fraction(self.total, self.count)

    @property
    def variance(self) -> Fraction:
        """Unbiased sample variance (0 for fewer than two observations)."""
        if self.count < 2:
            return Fraction(0)
        squared_dev = Fraction(self.total_sq) - Fraction(self.total * self.total, self.count)
        return squared_dev / (self.count - 1)

    @property
    def stddev(self) -> float:
        return math.sqrt(self.variance)

    def ci_halfwidth(self, confidence: float = CI_CONFIDENCE) -> float:
        """Normal-approximation half width of the confidence interval of the mean."""
        if self.count < 2:
            return 0.0
        return z_value(confidence) * self.stddev / math.sqrt(self.count)

    def sorted_histogram(self) -> Dict[int, int]:
        return dict(sorted(self.histogram.items()))


__all__ = ['IntegerAccumulator', 'z_value']
