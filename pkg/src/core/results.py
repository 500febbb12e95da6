"""
Standardized Result Classes for LDSC

Single Responsibility: Provide consistent result/output data structures

Provides standardized classes for:
- Generic operation / check results (parameter validation, sandwich checks)
- Execution timing for experiments

Domain reports (BoundsReport, LengthStats, ...) live next to the code that
produces them; every one of them exposes ``to_dict()`` like the classes here.

Usage:
    from src.core.results import OperationResult, ExecutionMetrics

    result = OperationResult(success=True, data={'M': 3})
    metrics = ExecutionMetrics.start('mc_expected_length')
    ...
    metrics.complete()

Does NOT:
- Execute operations (use execution modules)
- Raise errors (see src.utils.validation_utils.raise_if_invalid)
"""

from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional


@dataclass
class OperationResult:
    """
    Generic result for any operation.

    Use this for operations that need to return success/failure status
    along with data, errors, warnings, and metadata.

    Attributes:
        success: Whether operation succeeded
        data: Operation result data (any type)
        errors: List of error messages
        warnings: List of warning messages
        metadata: Additional context/metadata

    Examples:
        >>> result = OperationResult(success=True, data={'count': 5})
        >>> result.add_warning('CI slack used')
        >>> result.has_warnings()
        True
    """
    success: bool
    data: Optional[Any] = None
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def add_error(self, error: str) -> None:
        """Add error and mark as failed"""
        self.errors.append(error)
        self.success = False

    def add_warning(self, warning: str) -> None:
        """Add warning (doesn't affect success)"""
        self.warnings.append(warning)

    def has_errors(self) -> bool:
        return len(self.errors) > 0

    def has_warnings(self) -> bool:
        return len(self.warnings) > 0

    def is_complete_success(self) -> bool:
        """Check if succeeded with no warnings"""
        return self.success and not self.has_warnings()

    def to_dict(self) -> Dict[str, Any]:
        return {
            'success': self.success,
            'data': self.data,
            'errors': list(self.errors),
            'warnings': list(self.warnings),
            'metadata': dict(self.metadata),
        }


@dataclass
class ExecutionMetrics:
    """
    Execution timing for one experiment.

    Attributes:
        operation: Operation name
        start_time: Operation start timestamp
        end_time: Operation end timestamp
        duration_seconds: Duration in seconds
        items_processed: Trials, sequences or grid points handled
    """
    operation: str
    start_time: datetime
    end_time: Optional[datetime] = None
    duration_seconds: Optional[float] = None
    items_processed: Optional[int] = None

    @classmethod
    def start(cls, operation: str) -> 'ExecutionMetrics':
        return cls(operation=operation, start_time=datetime.now())

    def complete(self, items_processed: Optional[int] = None,
                 end_time: Optional[datetime] = None) -> None:
        """Mark operation as complete and calculate duration"""
        self.end_time = end_time or datetime.now()
        self.duration_seconds = (self.end_time - self.start_time).total_seconds()
        if items_processed is not None:
            self.items_processed = items_processed

    def is_complete(self) -> bool:
        return self.end_time is not None


__all__ = ['OperationResult', 'ExecutionMetrics']
