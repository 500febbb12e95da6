"""
LDSC Execution Package

Experiment harness around the codec.

Modules:
- statistics: exact integer accumulation, normal-approximation intervals
- monte_carlo: expected codeword length from trial-keyed samples
- sandwich: measured mean against the lower and upper bounds
- scaling: growth exponent of the mean length in n
- exhaustive: zero-error, probe-budget, injectivity and minimality sweep

Trials are keyed by (master_seed, trial number), so any split of the trial
range over workers aggregates to the same integers.
"""

from src.execution.statistics import IntegerAccumulator, z_value
from src.execution.monte_carlo import LengthStats, mc_expected_length
from src.execution.sandwich import SandwichResult, sandwich_check
from src.execution.scaling import ScalingPoint, ScalingResult, scaling_experiment
from src.execution.exhaustive import VerificationReport, exhaustive_verify

__all__ = [
    'IntegerAccumulator',
    'z_value',
    'LengthStats',
    'mc_expected_length',
    'SandwichResult',
    'sandwich_check',
    'ScalingPoint',
    'ScalingResult',
    'scaling_experiment',
    'VerificationReport',
    'exhaustive_verify',
]
