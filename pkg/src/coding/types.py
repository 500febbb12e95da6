"""
Domain types for the codebook and codec.

Single Responsibility: Immutable value objects shared by every coding module
- CodeParams: identifies a codebook (n, r, d, seed, search cap, scheme version)
- SparseSeq: an r-sparse source word given by its support
- Codeword: variable-length codeword as its length plus set-bit positions
- ProbeTrace: what one local decode read
- OUTSIDE: probe-plan answer for queries outside S_l

All indices are 1-based.

Usage:
    from src.coding.types import CodeParams, SparseSeq

    params = CodeParams(n=12, r=2, d=3)
    x = SparseSeq.from_support(12, [2, 6])
"""

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Iterable, Optional, Tuple, Union

from src.bounds.achievability import upper_bound_nonadaptive
from src.core import constants
from src.core.errors import InvalidParameterError, QueryOutOfRangeError
from src.utils.validation_utils import (
    check_code_parameters,
    raise_if_invalid,
    validate_all,
    validate_integer,
    validate_support,
    validate_value_range,
)


def default_k_max(n: int, r: int, d: int) -> int:
    """
    Default search cap: max(64, 8 * ceil(upper bound)); 64 when r = 0.
    """
    if r == 0:
        return constants.K_MAX_FLOOR
    bound = upper_bound_nonadaptive(n, r, d)
    return max(constants.K_MAX_FLOOR, constants.K_MAX_MULTIPLIER * math.ceil(bound))


@dataclass(frozen=True)
class CodeParams:
    """
    Parameters identifying one codebook.

    Attributes:
        n: Source length (bits)
        r: Sparsity (number of ones)
        d: Probe budget per query
        master_seed: 64-bit seed of every codebook random choice
        k_max: Encoder search cap (bits); None selects default_k_max
        scheme_version: PRF/sampler version the codebook is built with

    Raises:
        InvalidParameterError: On any violated invariant
    """
    n: int
    r: int
    d: int
    master_seed: int = constants.DEFAULT_MASTER_SEED
    k_max: Optional[int] = None
    scheme_version: int = constants.SCHEME_VERSION

    def __post_init__(self):
        check_code_parameters(self.n, self.r, self.d)
        raise_if_invalid(validate_all([
            validate_integer(self.master_seed, 'master_seed'),
            validate_integer(self.scheme_version, 'scheme_version'),
        ]))
        raise_if_invalid(validate_value_range(self.master_seed, 0, constants.MASK_64, 'master_seed'))
        if self.scheme_version not in constants.SUPPORTED_SCHEME_VERSIONS:
            raise InvalidParameterError(
                f"Unsupported scheme_version {self.scheme_version}; "
                f"supported: {sorted(constants.SUPPORTED_SCHEME_VERSIONS)}"
            )

        if self.k_max is None:
            object.__setattr__(self, 'k_max', default_k_max(self.n, self.r, self.d))
        raise_if_invalid(validate_integer(self.k_max, 'k_max'))
        raise_if_invalid(validate_value_range(self.k_max, self.k_min, None, 'k_max'))

    @property
    def k_min(self) -> int:
        """Shortest candidate codeword length, r*d + 1."""
        return self.r * self.d + 1

    def check_query(self, j: int) -> None:
        """Raise QueryOutOfRangeError unless 1 <= j <= n."""
        if isinstance(j, bool) or not isinstance(j, int) or not 1 <= j <= self.n:
            raise QueryOutOfRangeError(f"Query index {j!r} outside [1..{self.n}]")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'r': self.r,
            'd': self.d,
            'master_seed': self.master_seed,
            'k_max': self.k_max,
            'scheme_version': self.scheme_version,
        }


@dataclass(frozen=True)
class SparseSeq:
    """
    An r-sparse binary word of length n.

    Attributes:
        n: Length
        support: Strictly increasing 1-based positions of the ones
    """
    n: int
    support: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'support', tuple(self.support))
        raise_if_invalid(validate_support(self.support, self.n))

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> 'SparseSeq':
        """Build from any iterable of indices (sorted here)."""
        return cls(n, tuple(sorted(support)))

    @property
    def weight(self) -> int:
        return len(self.support)

    def bit(self, j: int) -> int:
        return 1 if j in self.support else 0

    def to_bits(self) -> Tuple[int, ...]:
        """Dense form, x_1..x_n."""
        ones = set(self.support)
        return tuple(1 if j in ones else 0 for j in range(1, self.n + 1))


@dataclass(frozen=True)
class Codeword:
    """
    A codeword: its length and the positions of its set bits.

    Attributes:
        length: Codeword length l in bits
        ones: Sorted 1-based positions of set bits, all in [1..l]
    """
    length: int
    ones: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'ones', tuple(sorted(set(self.ones))))
        raise_if_invalid(validate_value_range(self.length, 1, None, 'codeword length'))
        raise_if_invalid(validate_support(self.ones, self.length, field_name='codeword ones'))

    def bit(self, position: int) -> int:
        return 1 if position in self._ones_set else 0

    @cached_property
    def _ones_set(self) -> frozenset:
        return frozenset(self.ones)

    def to_bits(self) -> Tuple[int, ...]:
        ones = self._ones_set
        return tuple(1 if i in ones else 0 for i in range(1, self.length + 1))

    def to_dict(self) -> Dict[str, Any]:
        return {'length': self.length, 'ones': list(self.ones)}


class _Outside:
    """Singleton answer of probe_plan for j outside S_l."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return 'OUTSIDE'

    def __bool__(self) -> bool:
        return False


OUTSIDE = _Outside()

ProbePlan = Union[Tuple[int, ...], _Outside]
"""Either OUTSIDE or the sorted probe positions T_{j,l}."""


@dataclass(frozen=True)
class ProbeTrace:
    """
    Record of one local decode.

    Attributes:
        query: Queried index j
        level: Codeword length l the plan was taken from
        positions: Probed positions (empty when j is outside S_l)
        values: Bits read at those positions
        decoded: Decoded bit x_j
    """
    query: int
    level: int
    positions: Tuple[int, ...] = ()
    values: Tuple[int, ...] = ()
    decoded: int = 0

    @property
    def probes(self) -> int:
        return len(self.positions)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'query': self.query,
            'level': self.level,
            'positions': list(self.positions),
            'values': list(self.values),
            'decoded': self.decoded,
            'probes': self.probes,
        }


__all__ = [
    'CodeParams',
    'SparseSeq',
    'Codeword',
    'ProbeTrace',
    'OUTSIDE',
    'ProbePlan',
    'default_k_max',
]
