"""
Tests for src/combinatorics/prf.py
"""

import numpy as np

from src.combinatorics.prf import Role, SampleKey, mix64, prf64
from src.core.constants import MASK_64


def test_prf64_is_deterministic():
    """Test same (key, counter) twice gives the same word"""
    key = SampleKey.level_set(0, 10)
    assert prf64(key, 0) == prf64(key, 0)
    assert prf64(SampleKey.level_set(0, 10), 5) == prf64(key, 5)


def test_prf64_output_is_64_bit():
    """Test outputs stay within 64 bits"""
    key = SampleKey.probe_set(2**64 - 1, 7, 3)
    for counter in range(100):
        assert 0 <= prf64(key, counter) <= MASK_64


def test_prf64_counters_differ():
    """Test (key, 0) and (key, 1) differ across many keys"""
    for t in range(10_000):
        key = SampleKey.trial(12345, t)
        assert prf64(key, 0) != prf64(key, 1)


def test_roles_give_independent_streams():
    """Test keys differing only in role, level or index give different words"""
    words = {
        prf64(SampleKey(7, 10, Role.LEVEL_SET, 0), 0),
        prf64(SampleKey(7, 10, Role.PROBE_SET, 0), 0),
        prf64(SampleKey(7, 10, Role.TRIAL, 0), 0),
        prf64(SampleKey(7, 11, Role.LEVEL_SET, 0), 0),
        prf64(SampleKey(7, 10, Role.PROBE_SET, 1), 0),
        prf64(SampleKey(8, 10, Role.LEVEL_SET, 0), 0),
    }
    assert len(words) == 6


def test_sample_key_constructors():
    """Test classmethod constructors fill the key fields"""
    assert SampleKey.level_set(3, 9) == SampleKey(3, 9, Role.LEVEL_SET, 0)
    assert SampleKey.probe_set(3, 9, 4) == SampleKey(3, 9, Role.PROBE_SET, 4)
    assert SampleKey.trial(3, 17) == SampleKey(3, 0, Role.TRIAL, 17)


def test_mix64_is_injective_on_sample():
    """Test the finaliser does not collide on consecutive inputs"""
    outputs = {mix64(z) for z in range(10_000)}
    assert len(outputs) == 10_000


def test_prf64_bit_balance():
    """Test each output bit is set about half the time (5 sigma over 10^5 words)"""
    key = SampleKey.trial(2024, 0)
    draws = 100_000
    words = np.array([prf64(key, c) for c in range(draws)], dtype=np.uint64)
    shifts = np.arange(64, dtype=np.uint64)
    ones = ((words[:, None] >> shifts) & np.uint64(1)).sum(axis=0)

    sigma = (draws * 0.25) ** 0.5
    assert np.all(np.abs(ones - draws / 2) <= 5 * sigma)
