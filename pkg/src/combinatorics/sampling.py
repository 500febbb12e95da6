"""
Deterministic uniform subset sampling.

Floyd's algorithm driven by rejection-sampled uniform integers from prf64.
Indices are 1-based throughout.
"""

from typing import Tuple

from src.combinatorics.prf import SampleKey, prf64
from src.core.constants import MASK_64
from src.core.errors import InvalidSizeError

_TWO_64 = MASK_64 + 1


class UniformDraws:
    """
    Stream of uniform integers in [1..N] for one key.

    Words v >= N * floor(2^64 / N) are rejected, so every accepted
    (v mod N) + 1 is exactly uniform.
    """

    def __init__(self, key: SampleKey):
        self.key = key
        self.counter = 0

    def next_word(self) -> int:
        value = prf64(self.key, self.counter)
        self.counter += 1
        return value

    def uniform(self, upper: int) -> int:
        """Uniform integer in [1..upper]."""
        limit = upper * (_TWO_64 // upper)
        while True:
            value = self.next_word()
            if value < limit:
                return value % upper + 1


def sample_subset(universe_size: int, subset_size: int, key: SampleKey) -> Tuple[int, ...]:
    """
    Uniform m-subset of [1..N] as a sorted tuple.

    Raises:
        InvalidSizeError: If m > N or either size is negative

    Examples:
        >>> sample_subset(5, 5, SampleKey.trial(0, 1))
        (1, 2, 3, 4, 5)
        >>> sample_subset(5, 0, SampleKey.trial(0, 1))
        ()
    """
    if universe_size < 0 or subset_size < 0 or subset_size > universe_size:
        raise InvalidSizeError(
            f"Cannot sample {subset_size} of {universe_size} elements"
        )

    draws = UniformDraws(key)
    chosen = set()
    for j in range(universe_size - subset_size + 1, universe_size + 1):
        t = draws.uniform(j)
        chosen.add(j if t in chosen else t)

    return tuple(sorted(chosen))


__all__ = ['UniformDraws', 'sample_subset']
