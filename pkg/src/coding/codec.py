"""
Encoder and non-adaptive local decoder.

Single Responsibility: Map r-sparse words to variable-length codewords and back
- level_accepts: support within S_k, and no probe set of an index outside the support covered
- encode: smallest accepting level, ones = union of the support probe sets
- decode_bit: AND of the d probed bits, or 0 without probing when j is outside S_l
- decode_full: every bit, with a consistency check on the recovered weight

Usage:
    from src.coding.codec import encode, decode_bit

    params = CodeParams(n=12, r=2, d=3)
    c = encode(params, SparseSeq.from_support(12, [2, 6]))
    bit, trace = decode_bit(params, c, 2)
"""

from typing import Iterable, Optional, Tuple

import numpy as np

from src.coding.codebook import Codebook, LevelPlan, get_codebook
from src.coding.types import OUTSIDE, CodeParams, Codeword, ProbeTrace, SparseSeq
from src.core.errors import InconsistentCodeword, InvalidParameterError, SearchCapExceeded
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _covered_mask(plan: LevelPlan, support: Tuple[int, ...]) -> np.ndarray:
    mask = np.zeros(plan.k + 1, dtype=bool)
    for i in support:
        mask[list(plan.probe_sets[i])] = True
    return mask


def level_accepts(plan: LevelPlan, support: Iterable[int]) -> bool:
    """
    True iff support is inside S_k and no other j in S_k has T_{j,k}
    inside the union of the support's probe sets.

    Examples:
        >>> level_accepts(handmade_plan, (2, 6))
        True
        >>> level_accepts(handmade_plan, (2, 3))   # T_5 = {3,4,5} is covered
        False
    """
    support = tuple(support)
    if any(i not in plan.probe_sets for i in support):
        return False
    if plan.size == len(support):
        return True

    mask = _covered_mask(plan, support)
    covered = mask[plan.probe_matrix].all(axis=1)
    for i in support:
        covered[plan.rows[i]] = False
    return not bool(covered.any())


def _check_source(params: CodeParams, x: SparseSeq) -> None:
    if x.n != params.n:
        raise InvalidParameterError(f"Source length {x.n} does not match n={params.n}")
    if x.weight != params.r:
        raise InvalidParameterError(f"Source weight {x.weight} does not match r={params.r}")


def encode(params: CodeParams, x: SparseSeq, codebook: Optional[Codebook] = None) -> Codeword:
    """
    Encode x at the smallest level k in [r*d+1, k_max] that accepts its support.

    Levels with |S_k| < r or S_k missing part of the support are skipped
    without building their probe sets.

    Raises:
        InvalidParameterError: If x does not match (n, r)
        SearchCapExceeded: If no level up to k_max accepts
    """
    _check_source(params, x)
    codebook = codebook or get_codebook(params)
    support = x.support

    for k in range(params.k_min, params.k_max + 1):
        index_set = codebook.level_index_set(k)
        if len(index_set) < params.r or not index_set.issuperset(support):
            continue
        plan = codebook.level(k)
        if level_accepts(plan, support):
            ones = set()
            for i in support:
                ones.update(plan.probe_sets[i])
            return Codeword(k, tuple(sorted(ones)))

    logger.error(f"Search cap k_max={params.k_max} reached for support {list(support)}")
    raise SearchCapExceeded(support, params.k_max, params.master_seed)


def decode_bit(params: CodeParams, c: Codeword, j: int,
               codebook: Optional[Codebook] = None) -> Tuple[int, ProbeTrace]:
    """
    Recover x_j from the codeword length and at most d probed bits.

    The probed positions are fixed by probe_plan(j, l) before any bit is read.

    Raises:
        QueryOutOfRangeError: If j is not in [1..n]
        LengthOutOfRangeError: If l is not a valid level
    """
    codebook = codebook or get_codebook(params)
    plan = codebook.probe_plan(j, c.length)
    if plan is OUTSIDE:
        return 0, ProbeTrace(query=j, level=c.length, decoded=0)

    values = tuple(c.bit(p) for p in plan)
    bit = int(all(values))
    return bit, ProbeTrace(query=j, level=c.length, positions=tuple(plan), values=values, decoded=bit)


def decode_full(params: CodeParams, c: Codeword, codebook: Optional[Codebook] = None) -> SparseSeq:
    """
    Recover the whole source word; only j in S_l can decode to 1.

    Raises:
        LengthOutOfRangeError: If l is not a valid level
        InconsistentCodeword: If the recovered weight differs from r
    """
    codebook = codebook or get_codebook(params)
    codebook.check_length(c.length)

    support = []
    for j in codebook.level_index(c.length):
        bit, _ = decode_bit(params, c, j, codebook)
        if bit:
            support.append(j)

    if len(support) != params.r:
        logger.error(f"Decoded {len(support)} ones from a codeword of length {c.length}, expected r={params.r}")
        raise InconsistentCodeword(
            f"Recovered support {support} has size {len(support)}, expected r={params.r}"
        )
    return SparseSeq(params.n, tuple(support))


__all__ = ['level_accepts', 'encode', 'decode_bit', 'decode_full']
