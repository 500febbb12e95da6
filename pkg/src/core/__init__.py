"""
Core package for LDSC.

Provides configuration handling, the error hierarchy, result types and
system constants.
"""

from src.core.config import ConfigManager
from src.core import constants
from src.core import errors
from src.core.results import OperationResult, ExecutionMetrics

__all__ = [
    'ConfigManager',
    'constants',
    'errors',
    'OperationResult',
    'ExecutionMetrics',
]
