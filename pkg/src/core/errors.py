"""
Exception hierarchy for LDSC.

Single Responsibility: Name every failure mode the library can signal
- Domain errors (bad parameters, out-of-range queries)
- Computational failures (search cap, inconsistent codewords, unavailable bounds)
- Container format errors

Each class carries an ``exit_code`` so the command-line surface can map
failures to distinct process exit statuses without a lookup table.

Usage:
    from src.core.errors import SearchCapExceeded

    try:
        codeword = encoder.encode(x)
    except SearchCapExceeded as e:
        logger.error(f"Retry with a larger k_max: {e}")
"""

from typing import Optional, Sequence


class LdscError(Exception):
    """Base class for all LDSC errors."""

    exit_code = 1


# ==================== Domain errors ====================

class InvalidParameterError(LdscError, ValueError):
    """A parameter lies outside its documented domain."""

    exit_code = 3


class QueryOutOfRangeError(InvalidParameterError):
    """Query index j is not in [1..n]."""

    exit_code = 4


class LengthOutOfRangeError(InvalidParameterError):
    """Codeword length is not a valid level for the parameters."""

    exit_code = 5


class InvalidSizeError(InvalidParameterError):
    """Requested subset is larger than its universe."""

    exit_code = 3


# ==================== Computational failures ====================

class SearchCapExceeded(LdscError):
    """No level up to k_max satisfies both acceptance conditions."""

    exit_code = 10

    def __init__(self, support: Sequence[int], k_max: int, seed: Optional[int] = None):
        self.support = tuple(support)
        self.k_max = k_max
        self.seed = seed
        super().__init__(
            f"No level <= k_max={k_max} accepts support {list(self.support)}"
            f" (seed={seed}); retry with a larger k_max or another master seed"
        )


class InconsistentCodeword(LdscError):
    """Decoded support size differs from r (corruption or parameter mismatch)."""

    exit_code = 11


class BoundUnavailable(LdscError):
    """An exact bound cannot be computed within the exact-arithmetic limits."""

    exit_code = 12


class GuardViolation(LdscError):
    """An exhaustive sweep was requested on an instance that is too large."""

    exit_code = 13


class ProtocolError(LdscError):
    """The two-party simulation broke one of its transcript invariants."""

    exit_code = 14


# ==================== Container errors ====================

class ContainerError(LdscError, ValueError):
    """Malformed codeword container."""

    exit_code = 20


class BadMagic(ContainerError):
    exit_code = 21


class UnsupportedVersion(ContainerError):
    exit_code = 22


class TruncatedPayload(ContainerError):
    exit_code = 23


class NonzeroPadding(ContainerError):
    exit_code = 24


class TrailingBytes(ContainerError):
    exit_code = 25


__all__ = [
    'LdscError',
    'InvalidParameterError',
    'QueryOutOfRangeError',
    'LengthOutOfRangeError',
    'InvalidSizeError',
    'SearchCapExceeded',
    'InconsistentCodeword',
    'BoundUnavailable',
    'GuardViolation',
    'ProtocolError',
    'ContainerError',
    'BadMagic',
    'UnsupportedVersion',
    'TruncatedPayload',
    'NonzeroPadding',
    'TrailingBytes',
]
