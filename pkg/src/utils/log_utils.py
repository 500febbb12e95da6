"""
Logging Utilities for LDSC

Single Responsibility: Standardized logging patterns and helpers

Provides common patterns for:
- Operation logging (start, complete, failed)
- Report frame logging (rows/columns of pandas exports)
- Check result logging (sweeps, sandwiches)
- Codebook level logging
- File operation logging

Usage:
    from src.utils.log_utils import log_operation_start, log_operation_complete

    log_operation_start(logger, 'Monte Carlo run', n=12, r=2, d=3, trials=10000)
    # ... do operation ...
    log_operation_complete(logger, 'Monte Carlo run', status='success', mean=7.41)

Does NOT:
- Create loggers (use logger.py get_logger)
- Configure logging (use logger.py setup_logging)
"""

from typing import Optional, Any, List
import logging
import pandas as pd


# Status symbols for consistent formatting
STATUS_SUCCESS = '[OK]'
STATUS_WARNING = '[WARN]'
STATUS_ERROR = '[FAIL]'
STATUS_INFO = '[INFO]'

_STATUS_TABLE = {
    'success': (STATUS_SUCCESS, logging.INFO),
    'warning': (STATUS_WARNING, logging.WARNING),
    'error': (STATUS_ERROR, logging.ERROR),
    'info': (STATUS_INFO, logging.INFO),
}


def _format_context(context: dict) -> str:
    return ', '.join(f"{k}={v}" for k, v in context.items())


def log_operation_start(logger: logging.Logger,
                        operation: str,
                        level: int = logging.INFO,
                        **context) -> None:
    """
    Log operation start with context.

    Args:
        logger: Logger instance
        operation: Operation name/description
        level: Logging level (default: INFO)
        **context: Additional context to log (key=value pairs)

    Examples:
        >>> log_operation_start(logger, 'Exhaustive sweep', n=12, r=2, d=3)
        # Logs: "Exhaustive sweep... (n=12, r=2, d=3)"
    """
    if context:
        message = f"{operation}... ({_format_context(context)})"
    else:
        message = f"{operation}..."

    logger.log(level, message)


def log_operation_complete(logger: logging.Logger,
                           operation: str,
                           status: str = 'success',
                           level: Optional[int] = None,
                           **context) -> None:
    """
    Log operation completion with status.

    Args:
        logger: Logger instance
        operation: Operation name/description
        status: 'success', 'warning', 'error', or 'info'
        level: Logging level (auto-determined from status if None)
        **context: Additional context to log

    Examples:
        >>> log_operation_complete(logger, 'Scaling fit', status='success', slope=0.49)
        # Logs: "[OK] Scaling fit complete (slope=0.49)"
    """
    symbol, default_level = _STATUS_TABLE.get(status, _STATUS_TABLE['info'])
    level = level if level is not None else default_level

    if context:
        message = f"{symbol} {operation} complete ({_format_context(context)})"
    else:
        message = f"{symbol} {operation} complete"

    logger.log(level, message)


def log_validation_result(logger: logging.Logger,
                          is_valid: bool,
                          context: str,
                          errors: Optional[List[str]] = None,
                          warnings: Optional[List[str]] = None) -> None:
    """
    Log a check result with errors/warnings.

    Args:
        logger: Logger instance
        is_valid: Whether the check passed
        context: Description of what was checked
        errors: List of error messages (logged as ERROR)
        warnings: List of warning messages (logged as WARNING)

    Examples:
        >>> log_validation_result(logger, False, 'Bound sandwich', errors=['mean below LYM bound'])
        # Logs: "[FAIL] Bound sandwich validation failed"
        #       "[FAIL] mean below LYM bound"
    """
    if is_valid:
        logger.info(f"{STATUS_SUCCESS} {context} validation passed")
    else:
        logger.error(f"{STATUS_ERROR} {context} validation failed")

    for error in errors or []:
        logger.error(f"{STATUS_ERROR} {error}")

    for warning in warnings or []:
        logger.warning(f"{STATUS_WARNING} {warning}")


def log_frame_shape(logger: logging.Logger,
                    name: str,
                    df: pd.DataFrame,
                    action: str = 'Built',
                    level: int = logging.DEBUG) -> None:
    """
    Log report frame shape (rows and columns).

    Examples:
        >>> log_frame_shape(logger, 'scaling points', df)
        # Logs: "Built scaling points: 4 rows, 7 columns"
    """
    logger.log(level, f"{action} {name}: {len(df)} rows, {len(df.columns)} columns")


def log_level_build(logger: logging.Logger,
                    k: int,
                    level_size: int,
                    with_probes: bool,
                    source: str = 'prf') -> None:
    """
    Log a codebook level build at DEBUG.

    Examples:
        >>> log_level_build(logger, 10, 4, True, source='override')
        # Logs: "Level k=10: |S_k|=4, probes=yes (override)"
    """
    probes = 'yes' if with_probes else 'no'
    logger.debug(f"Level k={k}: |S_k|={level_size}, probes={probes} ({source})")


def log_file_operation(logger: logging.Logger,
                       operation: str,
                       path: Any,
                       status: str = 'success',
                       level: Optional[int] = None) -> None:
    """
    Log file operations (read, write, create, delete).

    Args:
        logger: Logger instance
        operation: Operation description ('Saved', 'Loaded', 'Created', etc.)
        path: File path
        status: 'success', 'warning', 'error'
        level: Logging level (auto-determined if None)

    Examples:
        >>> log_file_operation(logger, 'Saved report', 'outputs/mc.csv')
        # Logs: "[OK] Saved report: outputs/mc.csv"
    """
    if status == 'success':
        symbol, default_level = STATUS_SUCCESS, logging.DEBUG
    elif status == 'warning':
        symbol, default_level = STATUS_WARNING, logging.WARNING
    else:
        symbol, default_level = STATUS_ERROR, logging.ERROR

    level = level if level is not None else default_level
    logger.log(level, f"{symbol} {operation}: {path}")


def log_count_summary(logger: logging.Logger,
                      description: str,
                      count: int,
                      items: Optional[List[Any]] = None,
                      level: int = logging.INFO,
                      max_items: int = 10) -> None:
    """
    Log count summary with optional item list.

    Examples:
        >>> log_count_summary(logger, 'search-cap overflows', 2, items=[(1, 7), (3, 9)])
        # Logs: "Found 2 search-cap overflows: [(1, 7), (3, 9)]"
    """
    message = f"Found {count} {description}"

    if items:
        if len(items) <= max_items:
            message += f": {items}"
        else:
            message += f": {items[:max_items]} ... ({len(items) - max_items} more)"

    logger.log(level, message)


def log_progress(logger: logging.Logger,
                 current: int,
                 total: int,
                 item_name: str = 'item',
                 level: int = logging.INFO) -> None:
    """
    Log progress (current/total).

    Examples:
        >>> log_progress(logger, 2, 4, item_name='grid point')
        # Logs: "Processing grid point 2/4"
    """
    logger.log(level, f"Processing {item_name} {current}/{total}")


# Module-level exports
__all__ = [
    'log_operation_start',
    'log_operation_complete',
    'log_validation_result',
    'log_frame_shape',
    'log_level_build',
    'log_file_operation',
    'log_count_summary',
    'log_progress',
    # Status constants
    'STATUS_SUCCESS',
    'STATUS_WARNING',
    'STATUS_ERROR',
    'STATUS_INFO',
]
