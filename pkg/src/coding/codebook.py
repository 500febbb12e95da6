"""
Codebook: per-length level plans (S_k, {T_{j,k}}).

Single Responsibility: Build the random codebook deterministically from CodeParams
- S_k: uniform subset of [n] of size level_size(n, r, d, k)
- T_{j,k}: uniform d-subset of [k] for each j in S_k, drawn independently per j
- Level cache shared by encoder and decoder (each level built once)
- Override hook to inject hand-made plans (golden fixtures)

Encoder and decoder derive identical plans because every draw is keyed by
(master_seed, k, role, j). Probe sets of different j may coincide.

Usage:
    from src.coding.codebook import Codebook, get_codebook

    codebook = get_codebook(CodeParams(n=12, r=2, d=3))
    plan = codebook.level(10)
    codebook.probe_plan(j=2, length=10)   # OUTSIDE or (t1, ..., td)
"""

import threading
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from src.coding.levels import level_size, min_level
from src.coding.types import OUTSIDE, CodeParams, ProbePlan
from src.combinatorics.prf import SampleKey
from src.combinatorics.sampling import sample_subset
from src.core.errors import InvalidParameterError, LengthOutOfRangeError
from src.utils.log_utils import log_level_build
from src.utils.logger import get_logger

logger = get_logger(__name__)

ProbeSet = Tuple[int, ...]


@dataclass(frozen=True)
class LevelPlan:
    """
    Codebook material for one candidate length k.

    Attributes:
        k: Candidate codeword length
        index: S_k, sorted 1-based indices into [n]
        probe_sets: j -> T_{j,k} (sorted d-subset of [k]) for every j in S_k
        probe_matrix: |S_k| x d array of the probe sets in index order
        rows: j -> row of probe_matrix
    """
    k: int
    index: Tuple[int, ...]
    probe_sets: Mapping[int, ProbeSet]
    probe_matrix: np.ndarray = field(compare=False, repr=False)
    rows: Mapping[int, int] = field(compare=False, repr=False)

    @classmethod
    def from_probe_sets(cls, k: int, probe_sets: Mapping[int, ProbeSet], d: Optional[int] = None) -> 'LevelPlan':
        """
        Assemble a plan from its probe map; S_k is the key set.

        Raises:
            InvalidParameterError: If a probe set is not a d-subset of [1..k]
        """
        index = tuple(sorted(probe_sets))
        normalized = {j: tuple(sorted(probe_sets[j])) for j in index}

        sizes = {len(t) for t in normalized.values()}
        if d is not None:
            sizes.add(d)
        if len(sizes) > 1:
            raise InvalidParameterError(f"Probe sets of level k={k} differ in size: {sorted(sizes)}")
        for j, t in normalized.items():
            if len(set(t)) != len(t) or any(not 1 <= p <= k for p in t):
                raise InvalidParameterError(f"T_{{{j},{k}}}={t} is not a subset of [1..{k}]")

        width = sizes.pop() if sizes else 0
        matrix = np.array([normalized[j] for j in index], dtype=np.int64).reshape(len(index), width)
        return cls(
            k=k,
            index=index,
            probe_sets=MappingProxyType(normalized),
            probe_matrix=matrix,
            rows=MappingProxyType({j: row for row, j in enumerate(index)}),
        )

    @classmethod
    def empty(cls, k: int, d: int = 0) -> 'LevelPlan':
        """A level with S_k empty."""
        return cls.from_probe_sets(k, {}, d)

    @property
    def size(self) -> int:
        return len(self.index)

    def __contains__(self, j: int) -> bool:
        return j in self.probe_sets


def sample_level_index(params: CodeParams, k: int) -> Tuple[int, ...]:
    """S_k for (params, k)."""
    m = level_size(params.n, params.r, params.d, k)
    return sample_subset(params.n, m, SampleKey.level_set(params.master_seed, k))


def sample_probe_set(params: CodeParams, k: int, j: int) -> ProbeSet:
    """T_{j,k} for (params, k, j)."""
    return sample_subset(k, params.d, SampleKey.probe_set(params.master_seed, k, j))


def build_level(params: CodeParams, k: int) -> LevelPlan:
    """
    Build the level plan for k straight from the keyed PRF (no cache, no overrides).

    Raises:
        LengthOutOfRangeError: If k < r*d + 1
    """
    index = sample_level_index(params, k)
    probe_sets = {j: sample_probe_set(params, k, j) for j in index}
    return LevelPlan.from_probe_sets(k, probe_sets, params.d)


class Codebook:
    """
    Lazily built, cached codebook for one CodeParams.

    Levels are filled under a lock so every level is built exactly once.
    S_k alone can be requested without probe sets (cheap containment test).

    Attributes:
        params: Codebook parameters
        overrides: k -> LevelPlan replacing the PRF-derived level (sizes not enforced)
    """

    def __init__(self, params: CodeParams, overrides: Optional[Mapping[int, LevelPlan]] = None):
        self.params = params
        self.overrides: Dict[int, LevelPlan] = dict(overrides or {})
        self._indices: Dict[int, Tuple[int, ...]] = {}
        self._index_sets: Dict[int, frozenset] = {}
        self._levels: Dict[int, LevelPlan] = {}
        self._lock = threading.RLock()

        for k, plan in self.overrides.items():
            if plan.k != k:
                raise InvalidParameterError(f"Override for k={k} carries a plan for k={plan.k}")

    def check_length(self, length: int) -> None:
        """
        Raise LengthOutOfRangeError unless r*d+1 <= length <= k_max.
        """
        lower = min_level(self.params.r, self.params.d)
        if isinstance(length, bool) or not isinstance(length, int) or not lower <= length <= self.params.k_max:
            raise LengthOutOfRangeError(
                f"Codeword length {length!r} outside [{lower}..{self.params.k_max}]"
            )

    def level_index(self, k: int) -> Tuple[int, ...]:
        """S_k (built without probe sets when not cached yet)."""
        cached = self._indices.get(k)
        if cached is not None:
            return cached
        with self._lock:
            if k not in self._indices:
                if k in self.overrides:
                    index = self.overrides[k].index
                else:
                    index = sample_level_index(self.params, k)
                self._index_sets[k] = frozenset(index)
                self._indices[k] = index
            return self._indices[k]

    def level_index_set(self, k: int) -> frozenset:
        self.level_index(k)
        return self._index_sets[k]

    def level(self, k: int) -> LevelPlan:
        """Full plan for k (override if present)."""
        cached = self._levels.get(k)
        if cached is not None:
            return cached
        with self._lock:
            if k not in self._levels:
                if k in self.overrides:
                    plan = self.overrides[k]
                    source = 'override'
                else:
                    index = self.level_index(k)
                    probe_sets = {j: sample_probe_set(self.params, k, j) for j in index}
                    plan = LevelPlan.from_probe_sets(k, probe_sets, self.params.d)
                    source = 'prf'
                self._levels[k] = plan
                self._index_sets.setdefault(k, frozenset(plan.index))
                self._indices.setdefault(k, plan.index)
                log_level_build(logger, k, plan.size, True, source)
            return self._levels[k]

    def probe_set(self, j: int, k: int) -> ProbeSet:
        """T_{j,k} for j in S_k, without building the other probe sets."""
        plan = self._levels.get(k)
        if plan is not None:
            return plan.probe_sets[j]
        if k in self.overrides:
            return self.overrides[k].probe_sets[j]
        return sample_probe_set(self.params, k, j)

    def probe_plan(self, j: int, length: int) -> ProbePlan:
        """
        Positions the decoder reads for query j on a codeword of this length.

        Depends only on (params, j, length), never on codeword content.

        Raises:
            QueryOutOfRangeError: If j is not in [1..n]
            LengthOutOfRangeError: If length is not a valid level
        """
        self.params.check_query(j)
        self.check_length(length)
        if j not in self.level_index_set(length):
            return OUTSIDE
        return self.probe_set(j, length)

    def cached_levels(self) -> int:
        return len(self._levels)

    def __repr__(self) -> str:
        return (f"Codebook(n={self.params.n}, r={self.params.r}, d={self.params.d}, "
                f"seed={self.params.master_seed}, levels={len(self._levels)}, "
                f"overrides={sorted(self.overrides)})")


@lru_cache(maxsize=32)
def get_codebook(params: CodeParams) -> Codebook:
    """Shared PRF-derived codebook for params (no overrides)."""
    return Codebook(params)


def probe_plan(params: CodeParams, j: int, length: int) -> ProbePlan:
    """Module-level probe_plan on the shared codebook of params."""
    return get_codebook(params).probe_plan(j, length)


__all__ = [
    'LevelPlan',
    'Codebook',
    'build_level',
    'get_codebook',
    'probe_plan',
    'sample_level_index',
    'sample_probe_set',
    'level_size',
    'min_level',
]
