"""
Shared fixtures.

The hand-made plan used throughout is the 12-bit, 2-sparse, 3-probe example:
levels 7..9 are empty and level 10 has

    S_10 = {2, 3, 5, 6}
    T_2 = {2, 3, 4}, T_3 = {2, 4, 5}, T_5 = {3, 4, 5}, T_6 = {6, 7, 8}

so every accepted word is encoded at length 10.
"""

import pytest

from src.coding.codebook import Codebook, LevelPlan
from src.coding.types import CodeParams
from src.utils.logger import reset_logging

HANDMADE_PROBE_SETS = {2: (2, 3, 4), 3: (2, 4, 5), 5: (3, 4, 5), 6: (6, 7, 8)}


@pytest.fixture
def handmade_params():
    return CodeParams(n=12, r=2, d=3, master_seed=0, k_max=10)


@pytest.fixture
def handmade_plan():
    return LevelPlan.from_probe_sets(10, HANDMADE_PROBE_SETS, 3)


@pytest.fixture
def handmade_codebook(handmade_params, handmade_plan):
    overrides = {k: LevelPlan.empty(k, 3) for k in (7, 8, 9)}
    overrides[10] = handmade_plan
    return Codebook(handmade_params, overrides)


@pytest.fixture
def small_params():
    return CodeParams(n=12, r=2, d=3, master_seed=0)


@pytest.fixture(autouse=True)
def _detach_log_handlers():
    """CLI runs install stderr handlers on streams that close after the run."""
    yield
    reset_logging()
