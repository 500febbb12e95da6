"""
Validation Utilities for LDSC

Single Responsibility: Common validation patterns and helpers

Provides utilities for:
- Integer and value range validation
- Probability (block-error rate) validation
- Support set validation (1-based, strictly increasing, in range)
- Combining results and converting failures into typed errors

Usage:
    from src.utils.validation_utils import validate_value_range, validate_all, raise_if_invalid

    result = validate_all([
        validate_value_range(d, min_value=1, field_name='d'),
        validate_value_range(r, min_value=0, max_value=n, field_name='r'),
    ])
    raise_if_invalid(result)

Does NOT:
- Decide acceptance of codebook levels (use coding.codec)
"""

import numbers
from typing import Any, Iterable, List, Optional, Tuple, Type
import logging

from src.core.errors import InvalidParameterError
from src.core.results import OperationResult


def validate_integer(value: Any,
                     field_name: str = "value",
                     logger: Optional[logging.Logger] = None) -> OperationResult:
    """
    Validate value is an integer (bools and floats rejected).

    Examples:
        >>> validate_integer(3, 'n').success
        True
        >>> validate_integer(2.0, 'n').success
        False
    """
    result = OperationResult(success=True)

    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        result.add_error(f"{field_name} must be an integer, got {value!r}")
        if logger:
            logger.error(result.errors[0])

    return result


def validate_value_range(value: Any,
                         min_value: Optional[Any] = None,
                         max_value: Optional[Any] = None,
                         field_name: str = "value",
                         logger: Optional[logging.Logger] = None) -> OperationResult:
    """
    Validate value is within specified range.

    Args:
        value: Value to validate
        min_value: Minimum allowed value (inclusive)
        max_value: Maximum allowed value (inclusive)
        field_name: Name of field for error messages
        logger: Optional logger

    Returns:
        OperationResult with validation status

    Examples:
        >>> validate_value_range(5, min_value=1, max_value=10, field_name='d').success
        True
    """
    result = OperationResult(success=True)

    if min_value is not None and value < min_value:
        result.add_error(f"{field_name} ({value}) is below minimum ({min_value})")

    if max_value is not None and value > max_value:
        result.add_error(f"{field_name} ({value}) is above maximum ({max_value})")

    if not result.success and logger:
        logger.error(result.errors[0])

    return result


def validate_probability(eps: Any, field_name: str = "eps") -> OperationResult:
    """
    Validate a block-error rate: a real number in [0, 1).

    Examples:
        >>> validate_probability(0.5).success
        True
        >>> validate_probability(1.0).success
        False
    """
    result = OperationResult(success=True)

    if isinstance(eps, bool) or not isinstance(eps, numbers.Real):
        result.add_error(f"{field_name} must be a real number, got {eps!r}")
    elif not 0 <= eps < 1:
        result.add_error(f"{field_name} ({eps}) must lie in [0, 1)")

    return result


def validate_support(support: Iterable[int],
                     n: int,
                     expected_size: Optional[int] = None,
                     field_name: str = "support") -> OperationResult:
    """
    Validate a support set: 1-based, strictly increasing, within [1..n].

    Examples:
        >>> validate_support([2, 6], n=12, expected_size=2).success
        True
        >>> validate_support([6, 2], n=12).errors
        ['support must be strictly increasing, got [6, 2]']
    """
    result = OperationResult(success=True)
    items = list(support)

    for i in items:
        if isinstance(i, bool) or not isinstance(i, numbers.Integral):
            result.add_error(f"{field_name} entries must be integers, got {i!r}")
            return result

    if any(b <= a for a, b in zip(items, items[1:])):
        result.add_error(f"{field_name} must be strictly increasing, got {items}")

    outside = [i for i in items if not 1 <= i <= n]
    if outside:
        result.add_error(f"{field_name} indices {outside} outside [1..{n}]")

    if expected_size is not None and len(items) != expected_size:
        result.add_error(f"{field_name} has {len(items)} entries, expected {expected_size}")

    return result


def validate_list_not_empty(lst: List,
                            list_name: str = "list",
                            min_length: int = 1) -> OperationResult:
    """
    Validate list has at least ``min_length`` entries.

    Examples:
        >>> validate_list_not_empty([256], 'n_grid', min_length=2).success
        False
    """
    result = OperationResult(success=True)

    if len(lst) < min_length:
        result.add_error(f"{list_name} needs at least {min_length} entries, got {len(lst)}")

    return result


def validate_all(validations: List[OperationResult],
                 logger: Optional[logging.Logger] = None) -> OperationResult:
    """
    Combine multiple validation results into one.

    Examples:
        >>> combined = validate_all([validate_integer(3, 'n'), validate_value_range(0, 1, None, 'd')])
        >>> combined.success
        False
    """
    result = OperationResult(success=True)

    for validation in validations:
        if not validation.success:
            result.success = False
            result.errors.extend(validation.errors)
        result.warnings.extend(validation.warnings)

    if not result.success and logger:
        logger.error(f"Combined validation failed with {len(result.errors)} errors")

    return result


def raise_if_invalid(result: OperationResult,
                     error_cls: Type[InvalidParameterError] = InvalidParameterError) -> None:
    """
    Raise ``error_cls`` carrying every collected message when validation failed.
    """
    if not result.success:
        raise error_cls("; ".join(result.errors))


def check_code_parameters(n: Any, r: Any, d: Any) -> Tuple[int, int, int]:
    """
    Validate (n, r, d) with 0 <= r <= n, d >= 1, n >= 1.

    Raises:
        InvalidParameterError: On any violation (all messages joined)
    """
    result = validate_all([validate_integer(n, 'n'), validate_integer(r, 'r'), validate_integer(d, 'd')])
    raise_if_invalid(result)
    raise_if_invalid(validate_all([
        validate_value_range(n, min_value=1, field_name='n'),
        validate_value_range(r, min_value=0, max_value=n, field_name='r'),
        validate_value_range(d, min_value=1, field_name='d'),
    ]))
    return int(n), int(r), int(d)


# Module-level exports
__all__ = [
    'validate_integer',
    'validate_value_range',
    'validate_probability',
    'validate_support',
    'validate_list_not_empty',
    'validate_all',
    'raise_if_invalid',
    'check_code_parameters',
]
