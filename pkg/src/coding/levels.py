"""
Level sizes of the codebook.

|S_k| = min(n, floor((r/(r+1)) * C(k,d) / C(rd,d))), exact rational before the floor.
"""

from fractions import Fraction

from src.combinatorics.binomial import binom_exact
from src.core.errors import LengthOutOfRangeError


def min_level(r: int, d: int) -> int:
    """Smallest candidate codeword length, r*d + 1."""
    return r * d + 1


def level_size(n: int, r: int, d: int, k: int) -> int:
    """
    Size of S_k.

    Raises:
        LengthOutOfRangeError: If k < r*d + 1

    Examples:
        >>> level_size(12, 2, 3, 10)
        4
        >>> level_size(12, 2, 3, 7)
        1
        >>> level_size(12, 0, 3, 5)
        0
    """
    if k < min_level(r, d):
        raise LengthOutOfRangeError(f"Level k={k} is below r*d+1={min_level(r, d)}")
    if r == 0:
        return 0

    ratio = Fraction(r, r + 1) * Fraction(binom_exact(k, d), binom_exact(r * d, d))
    return min(n, ratio.numerator // ratio.denominator)


__all__ = ['min_level', 'level_size']
