"""
Tests for src/coding/codebook.py
"""

import threading

import pytest

from src.coding.codebook import Codebook, LevelPlan, build_level, get_codebook, probe_plan
from src.coding.levels import level_size
from src.coding.types import OUTSIDE, CodeParams
from src.core.errors import InvalidParameterError, LengthOutOfRangeError, QueryOutOfRangeError


# ==================== LevelPlan Tests ====================

def test_handmade_plan_contents(handmade_plan):
    """Test the injected plan exposes S_k and T_{j,k}"""
    assert handmade_plan.index == (2, 3, 5, 6)
    assert handmade_plan.probe_sets[2] == (2, 3, 4)
    assert handmade_plan.probe_sets[6] == (6, 7, 8)
    assert handmade_plan.size == 4
    assert 5 in handmade_plan and 4 not in handmade_plan
    assert handmade_plan.probe_matrix.shape == (4, 3)


def test_level_plan_rejects_mixed_sizes():
    with pytest.raises(InvalidParameterError):
        LevelPlan.from_probe_sets(10, {1: (1, 2), 2: (1, 2, 3)})


def test_level_plan_rejects_positions_beyond_k():
    with pytest.raises(InvalidParameterError):
        LevelPlan.from_probe_sets(5, {1: (4, 5, 6)}, 3)


def test_empty_level_plan():
    plan = LevelPlan.empty(7, 3)
    assert plan.size == 0
    assert plan.probe_matrix.shape == (0, 3)


# ==================== build_level Tests ====================

def test_build_level_is_deterministic():
    """Test rebuilding (params, k) gives an identical plan"""
    params = CodeParams(n=12, r=2, d=3, master_seed=5)
    assert build_level(params, 10) == build_level(params, 10)


def test_build_level_shape():
    """Test |S_k| = level_size and every T is a d-subset of [k]"""
    params = CodeParams(n=40, r=2, d=3, master_seed=1)
    for k in range(7, 30):
        plan = build_level(params, k)
        assert plan.size == level_size(40, 2, 3, k)
        for t in plan.probe_sets.values():
            assert len(t) == 3 and all(1 <= p <= k for p in t)


def test_build_level_r_zero():
    """Test the zero-size level"""
    plan = build_level(CodeParams(n=12, r=0, d=3), 1)
    assert plan.index == ()
    assert dict(plan.probe_sets) == {}


def test_build_level_below_min_raises():
    with pytest.raises(LengthOutOfRangeError):
        build_level(CodeParams(n=12, r=2, d=3), 6)


def test_seeds_change_codebook():
    """Test different master seeds draw different levels"""
    plans = {build_level(CodeParams(n=60, r=2, d=3, master_seed=s), 20).index for s in range(5)}
    assert len(plans) > 1


# ==================== Codebook Tests ====================

def test_codebook_matches_build_level():
    """Test cached levels equal the uncached construction"""
    params = CodeParams(n=30, r=2, d=2, master_seed=3)
    codebook = Codebook(params)
    for k in range(5, 15):
        assert codebook.level(k) == build_level(params, k)
        assert codebook.level_index(k) == build_level(params, k).index


def test_codebook_probe_set_without_level(small_params):
    """Test T_{j,k} drawn directly equals the one in the full plan"""
    fresh = Codebook(small_params)
    full = Codebook(small_params).level(15)
    for j in full.index:
        assert fresh.probe_set(j, 15) == full.probe_sets[j]
    assert fresh.cached_levels() == 0


def test_codebook_override_mismatch_raises(handmade_params, handmade_plan):
    with pytest.raises(InvalidParameterError):
        Codebook(handmade_params, {9: handmade_plan})


def test_codebook_concurrent_build_is_consistent():
    """Test threads filling the cache see one plan per level"""
    params = CodeParams(n=50, r=2, d=3, master_seed=11)
    codebook = Codebook(params)
    results = []

    def worker():
        results.append(tuple(codebook.level(k).index for k in range(7, 25)))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()

    assert len(set(results)) == 1
    assert codebook.cached_levels() == 18


def test_get_codebook_is_shared():
    params = CodeParams(n=12, r=2, d=3, master_seed=99)
    assert get_codebook(params) is get_codebook(CodeParams(n=12, r=2, d=3, master_seed=99))


# ==================== probe_plan Tests ====================

def test_probe_plan_outside(handmade_codebook):
    """Test j outside S_l gives OUTSIDE"""
    assert handmade_codebook.probe_plan(4, 10) is OUTSIDE


def test_probe_plan_inside(handmade_codebook):
    assert handmade_codebook.probe_plan(2, 10) == (2, 3, 4)


def test_probe_plan_empty_level(handmade_codebook):
    """Test every j is outside an empty level"""
    for j in range(1, 13):
        assert handmade_codebook.probe_plan(j, 8) is OUTSIDE


def test_probe_plan_rejects_bad_inputs(handmade_codebook):
    with pytest.raises(QueryOutOfRangeError):
        handmade_codebook.probe_plan(13, 10)
    with pytest.raises(LengthOutOfRangeError):
        handmade_codebook.probe_plan(2, 11)
    with pytest.raises(LengthOutOfRangeError):
        handmade_codebook.probe_plan(2, 6)


def test_module_probe_plan_uses_shared_codebook():
    params = CodeParams(n=12, r=2, d=3, master_seed=4)
    for j in range(1, 13):
        assert probe_plan(params, j, 20) == get_codebook(params).probe_plan(j, 20)
