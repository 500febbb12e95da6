"""
Combinatorics package for LDSC.

Exact/log binomials, the keyed PRF and deterministic subset sampling.
"""

from src.combinatorics.binomial import binom_exact, log_binom, log2_binom
from src.combinatorics.prf import Role, SampleKey, prf64
from src.combinatorics.sampling import UniformDraws, sample_subset

__all__ = [
    'binom_exact',
    'log_binom',
    'log2_binom',
    'Role',
    'SampleKey',
    'prf64',
    'UniformDraws',
    'sample_subset',
]
