"""
Bounds package for LDSC.

Converse (lower) bounds, the construction's upper bounds and the combined report.
"""

# achievability first: coding.types depends on it while coding loads
from src.bounds.achievability import upper_bound_nonadaptive
from src.bounds.converse import (
    adaptive_product_term,
    lower_bound_adaptive,
    max_codewords_of_length,
    lym_lower_bound,
    greedy_lower_bound,
    capacity_sum_check,
)
from src.bounds.ensemble import ensemble_length_bound
from src.bounds.report import BoundsReport, bounds_report, competitive_ratio

__all__ = [
    'upper_bound_nonadaptive',
    'adaptive_product_term',
    'lower_bound_adaptive',
    'max_codewords_of_length',
    'lym_lower_bound',
    'greedy_lower_bound',
    'capacity_sum_check',
    'ensemble_length_bound',
    'BoundsReport',
    'bounds_report',
    'competitive_ratio',
]
