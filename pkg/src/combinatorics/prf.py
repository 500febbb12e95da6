"""
Keyed 64-bit pseudorandom function (scheme version 1).

Every random choice of the codebook and of the experiments is a pure
function of a SampleKey and a counter, so encoder and decoder rebuild the
same codebook from (params, master_seed) alone.

Construction (pinned by SCHEME_VERSION; changing it changes every codebook):

    state = mix64(master_seed XOR DOMAIN)
    state = absorb(state, role)
    state = absorb(state, level)
    state = absorb(state, index)
    prf64 = absorb(state, counter)

    absorb(s, w) = mix64(((s XOR w) + GAMMA) mod 2^64)

with mix64 the SplitMix64 finaliser. Words are reduced mod 2^64 before
absorption. Since mix64 is a bijection, for a fixed key distinct counters
(below 2^64) give distinct outputs.
"""

from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property

from src.core.constants import MASK_64

GAMMA = 0x9E3779B97F4A7C15
DOMAIN = 0x4C44534331505246  # "LDSC1PRF"


class Role(IntEnum):
    """Stream roles; values are absorbed into the key."""

    LEVEL_SET = 1
    PROBE_SET = 2
    TRIAL = 3


def mix64(z: int) -> int:
    """SplitMix64 finaliser (a bijection on 64-bit words)."""
    z &= MASK_64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK_64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK_64
    return z ^ (z >> 31)


def absorb(state: int, word: int) -> int:
    return mix64(((state ^ (word & MASK_64)) + GAMMA) & MASK_64)


@dataclass(frozen=True)
class SampleKey:
    """
    Identifies one independent random stream.

    Attributes:
        master_seed: 64-bit seed of the codebook / experiment
        level: Candidate codeword length k (0 for trials)
        role: Which object the stream draws (S_k, T_{j,k} or a trial source word)
        index: j for PROBE_SET, the trial number for TRIAL, 0 otherwise
    """
    master_seed: int
    level: int
    role: Role
    index: int = 0

    @classmethod
    def level_set(cls, master_seed: int, k: int) -> 'SampleKey':
        return cls(master_seed, k, Role.LEVEL_SET, 0)

    @classmethod
    def probe_set(cls, master_seed: int, k: int, j: int) -> 'SampleKey':
        return cls(master_seed, k, Role.PROBE_SET, j)

    @classmethod
    def trial(cls, master_seed: int, t: int) -> 'SampleKey':
        return cls(master_seed, 0, Role.TRIAL, t)

    @cached_property
    def prefix(self) -> int:
        """Absorbed key state; the counter is folded in last."""
        state = mix64((self.master_seed & MASK_64) ^ DOMAIN)
        state = absorb(state, int(self.role))
        state = absorb(state, self.level)
        return absorb(state, self.index)


def prf64(key: SampleKey, counter: int) -> int:
    """
    Deterministic 64-bit output for (key, counter).

    Examples:
        >>> key = SampleKey.level_set(0, 10)
        >>> prf64(key, 0) == prf64(key, 0)
        True
    """
    return absorb(key.prefix, counter)


__all__ = ['Role', 'SampleKey', 'prf64', 'mix64', 'absorb', 'GAMMA', 'DOMAIN']
