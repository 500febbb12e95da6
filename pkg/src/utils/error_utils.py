"""
Error Handling Utilities for LDSC

Single Responsibility: Standardized error handling patterns

Provides utilities for:
- Safe function execution with error handling (optional report fields)
- Context managers for error handling (top-level operations)
- Exit code resolution for the command line

Usage:
    from src.utils.error_utils import safe_execute, error_context

    M = safe_execute(lym_lower_bound, n, r, d, default=None, logger=logger,
                     context='LYM bound')

    with error_context('Encoding support', logger=logger):
        codeword = encode(params, x)

Does NOT:
- Define exceptions (use src.core.errors)
- Validate parameters (use validation_utils)
"""

from typing import Callable, Any, Optional, Tuple, Type
from contextlib import contextmanager
import logging

from src.core.errors import LdscError


def safe_execute(func: Callable,
                 *args,
                 default: Any = None,
                 logger: Optional[logging.Logger] = None,
                 context: str = "",
                 catch: Tuple[Type[BaseException], ...] = (LdscError,),
                 **kwargs) -> Any:
    """
    Execute function with error handling and logging.

    Only the exception types in ``catch`` are swallowed (LdscError by default);
    anything else propagates.

    Args:
        func: Function to execute
        *args: Positional arguments for function
        default: Default value to return on error
        logger: Optional logger for messages (WARNING level)
        context: Context description for messages
        catch: Exception types converted into ``default``
        **kwargs: Keyword arguments for function

    Returns:
        Function result or default value on error

    Examples:
        >>> safe_execute(lym_lower_bound, 10**6, 500, 2, default=None)  # BoundUnavailable
        None
    """
    try:
        return func(*args, **kwargs)
    except catch as e:
        if logger:
            message = f"{context}: {e}" if context else str(e)
            logger.warning(message)
        return default


@contextmanager
def error_context(operation: str,
                  logger: Optional[logging.Logger] = None,
                  raise_on_error: bool = True):
    """
    Context manager for consistent error handling.

    Args:
        operation: Operation description
        logger: Optional logger
        raise_on_error: If True, re-raise errors; if False, suppress

    Examples:
        >>> with error_context('Exhaustive sweep', logger=logger):
        ...     exhaustive_verify(params)
        # Logs: "Error in Exhaustive sweep: [error message]" then re-raises
    """
    try:
        yield
    except Exception as e:
        if logger:
            logger.error(f"Error in {operation}: {e}")
        if raise_on_error:
            raise


def exit_code_for(error: BaseException) -> int:
    """
    Process exit status for an exception raised by a command.

    LdscError subclasses carry their own code; anything else maps to 1.
    """
    return getattr(error, 'exit_code', 1) if isinstance(error, LdscError) else 1


# Module-level exports
__all__ = [
    'safe_execute',
    'error_context',
    'exit_code_for',
]
