"""
Tests for src/coding/codec.py
"""

from itertools import combinations

import pytest

from src.coding.codebook import LevelPlan
from src.coding.codec import decode_bit, decode_full, encode, level_accepts
from src.coding.types import CodeParams, Codeword, SparseSeq
from src.core.errors import (
    InconsistentCodeword,
    InvalidParameterError,
    LengthOutOfRangeError,
    QueryOutOfRangeError,
    SearchCapExceeded,
)


# ==================== level_accepts Tests ====================

def test_level_accepts_handmade(handmade_plan):
    """Test acceptance on the hand-made level"""
    assert level_accepts(handmade_plan, (2, 6)) is True
    assert level_accepts(handmade_plan, (3, 6)) is True
    assert level_accepts(handmade_plan, (5, 6)) is True
    assert level_accepts(handmade_plan, (2, 3)) is False


def test_level_accepts_requires_support_in_level(handmade_plan):
    assert level_accepts(handmade_plan, (1, 2)) is False


def test_level_accepts_empty_support():
    """Test the empty support is accepted by an empty level"""
    assert level_accepts(LevelPlan.empty(1, 3), ()) is True


def test_level_accepts_coinciding_probe_sets():
    """Test a duplicate of a support probe set blocks the level"""
    plan = LevelPlan.from_probe_sets(5, {1: (1, 2), 2: (1, 2), 3: (3, 4)}, 2)
    assert level_accepts(plan, (1,)) is False
    assert level_accepts(plan, (3,)) is True


# ==================== encode Tests ====================

def test_encode_handmade(handmade_params, handmade_codebook):
    """Test the three accepted words of the hand-made codebook"""
    expected = {
        (2, 6): (2, 3, 4, 6, 7, 8),
        (3, 6): (2, 4, 5, 6, 7, 8),
        (5, 6): (3, 4, 5, 6, 7, 8),
    }
    for support, ones in expected.items():
        c = encode(handmade_params, SparseSeq(12, support), handmade_codebook)
        assert c == Codeword(10, ones)


def test_encode_search_cap(handmade_params, handmade_codebook):
    """Test a word no level accepts raises SearchCapExceeded"""
    with pytest.raises(SearchCapExceeded) as info:
        encode(handmade_params, SparseSeq(12, (2, 3)), handmade_codebook)
    assert info.value.support == (2, 3)
    assert info.value.k_max == 10


def test_encode_r_zero():
    """Test r = 0 encodes to one zero bit"""
    for seed in range(3):
        params = CodeParams(n=7, r=0, d=2, master_seed=seed)
        assert encode(params, SparseSeq(7, ())) == Codeword(1, ())


def test_encode_rejects_wrong_weight(small_params):
    with pytest.raises(InvalidParameterError):
        encode(small_params, SparseSeq(12, (1, 2, 3)))


def test_encode_rejects_wrong_length(small_params):
    with pytest.raises(InvalidParameterError):
        encode(small_params, SparseSeq(10, (1, 2)))


def test_encode_is_deterministic(small_params):
    x = SparseSeq(12, (4, 9))
    assert encode(small_params, x) == encode(CodeParams(n=12, r=2, d=3, master_seed=0), x)


def test_encode_length_at_least_min_level(small_params):
    for support in combinations(range(1, 13), 2):
        assert encode(small_params, SparseSeq(12, support)).length >= 7


# ==================== decode_bit Tests ====================

def test_decode_bit_outside(handmade_params, handmade_codebook):
    """Test j outside S_l answers 0 without probing"""
    c = Codeword(10, (2, 3, 4, 6, 7, 8))
    bit, trace = decode_bit(handmade_params, c, 4, handmade_codebook)
    assert bit == 0
    assert trace.probes == 0


def test_decode_bit_inside_one(handmade_params, handmade_codebook):
    c = Codeword(10, (2, 3, 4, 6, 7, 8))
    bit, trace = decode_bit(handmade_params, c, 2, handmade_codebook)
    assert bit == 1
    assert trace.positions == (2, 3, 4)
    assert trace.values == (1, 1, 1)
    assert trace.probes == 3


def test_decode_bit_inside_zero(handmade_params, handmade_codebook):
    c = Codeword(10, (2, 3, 4, 6, 7, 8))
    bit, trace = decode_bit(handmade_params, c, 3, handmade_codebook)
    assert bit == 0
    assert trace.positions == (2, 4, 5)
    assert trace.values == (1, 1, 0)


def test_decode_bit_rejects_bad_query(handmade_params, handmade_codebook):
    c = Codeword(10, (2, 3, 4, 6, 7, 8))
    with pytest.raises(QueryOutOfRangeError):
        decode_bit(handmade_params, c, 0, handmade_codebook)


def test_decode_bit_rejects_bad_length(handmade_params, handmade_codebook):
    with pytest.raises(LengthOutOfRangeError):
        decode_bit(handmade_params, Codeword(5, ()), 2, handmade_codebook)


# ==================== decode_full Tests ====================

def test_decode_full_handmade(handmade_params, handmade_codebook):
    c = Codeword(10, (3, 4, 5, 6, 7, 8))
    assert decode_full(handmade_params, c, handmade_codebook).support == (5, 6)


def test_decode_full_r_zero():
    params = CodeParams(n=5, r=0, d=1)
    assert decode_full(params, Codeword(1, ())).to_bits() == (0, 0, 0, 0, 0)


def test_decode_full_inconsistent(handmade_params, handmade_codebook):
    """Test an all-zero codeword decodes to weight 0 != r"""
    with pytest.raises(InconsistentCodeword):
        decode_full(handmade_params, Codeword(10, ()), handmade_codebook)


def test_round_trip_exhaustive_8_2_2():
    """Test decode_full(encode(x)) = x for every 2-subset of [8]"""
    params = CodeParams(n=8, r=2, d=2, master_seed=0)
    for support in combinations(range(1, 9), 2):
        x = SparseSeq(8, support)
        assert decode_full(params, encode(params, x)) == x
