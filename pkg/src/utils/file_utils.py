"""
File and Path Utilities for LDSC

Single Responsibility: File/path operations and I/O utilities

Provides common patterns for:
- Directory creation for report outputs
- JSON file I/O (reports)
- Binary file I/O (codeword containers)
- Support-list text parsing (whitespace-separated 1-based indices)

Usage:
    from src.utils.file_utils import save_json, write_bytes, parse_support_text

    save_json(report.to_dict(), 'outputs/bounds.json')
    write_bytes(container, 'x.sldc')
    support = parse_support_text("2 6\\n")

Does NOT:
- Serialize codewords (use coding.container)
- Shape report tables (use export.reports)
"""

from pathlib import Path
from typing import Union, Any, List, Optional
import json
import logging

from src.core.errors import InvalidParameterError


def ensure_path_exists(path: Union[str, Path],
                       is_file: bool = False,
                       logger: Optional[logging.Logger] = None) -> Path:
    """
    Ensure path exists, raise if not found.

    Raises:
        FileNotFoundError: If path does not exist

    Examples:
        >>> ensure_path_exists('x.sldc', is_file=True)
        PosixPath('x.sldc')
    """
    path_obj = Path(path)

    if not path_obj.exists():
        item_type = "file" if is_file else "directory"
        error_msg = f"{item_type.capitalize()} not found: {path_obj}"

        if logger:
            logger.error(error_msg)

        raise FileNotFoundError(error_msg)

    return path_obj


def ensure_directory(path: Union[str, Path],
                     logger: Optional[logging.Logger] = None) -> Path:
    """
    Create directory (and parents) if it doesn't exist.

    Examples:
        >>> ensure_directory('outputs')
        PosixPath('outputs')
    """
    path_obj = Path(path)

    if not path_obj.exists():
        path_obj.mkdir(parents=True, exist_ok=True)
        if logger:
            logger.debug(f"Created directory: {path_obj}")

    return path_obj


def _json_default(value: Any) -> Any:
    # numpy scalars and Fractions show up in report dicts
    if hasattr(value, 'item'):
        return value.item()
    if hasattr(value, 'numerator') and hasattr(value, 'denominator'):
        return float(value)
    if isinstance(value, (set, frozenset, tuple)):
        return sorted(value) if isinstance(value, (set, frozenset)) else list(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def to_json_text(data: Any, indent: Optional[int] = 2) -> str:
    """
    Render report data as JSON text (numpy scalars and Fractions converted).

    Examples:
        >>> to_json_text({'M': 3, 'lower_lym': 2.0}, indent=None)
        '{"M": 3, "lower_lym": 2.0}'
    """
    return json.dumps(data, indent=indent, default=_json_default)


def save_json(data: Any,
              path: Union[str, Path],
              indent: int = 2,
              encoding: str = 'utf-8',
              logger: Optional[logging.Logger] = None) -> None:
    """
    Save dictionary as JSON file with error handling.

    Raises:
        IOError: If file cannot be written
        TypeError: If data is not JSON-serializable

    Examples:
        >>> save_json(report.to_dict(), 'outputs/bounds.json')
    """
    path_obj = Path(path)

    try:
        ensure_directory(path_obj.parent)
        text = to_json_text(data, indent=indent)
        path_obj.write_text(text, encoding=encoding)

        if logger:
            logger.debug(f"Saved JSON to: {path_obj}")

    except (IOError, OSError) as e:
        error_msg = f"Failed to save JSON to {path_obj}: {e}"
        if logger:
            logger.error(error_msg)
        raise IOError(error_msg) from e
    except TypeError as e:
        error_msg = f"Data is not JSON-serializable: {e}"
        if logger:
            logger.error(error_msg)
        raise TypeError(error_msg) from e


def write_bytes(data: bytes,
                path: Union[str, Path],
                logger: Optional[logging.Logger] = None) -> Path:
    """
    Write a binary blob, creating parent directories.

    Raises:
        IOError: If file cannot be written
    """
    path_obj = Path(path)

    try:
        ensure_directory(path_obj.parent)
        path_obj.write_bytes(data)
    except OSError as e:
        error_msg = f"Failed to write {path_obj}: {e}"
        if logger:
            logger.error(error_msg)
        raise IOError(error_msg) from e

    if logger:
        logger.debug(f"Wrote {len(data)} bytes to: {path_obj}")
    return path_obj


def read_bytes(path: Union[str, Path],
               logger: Optional[logging.Logger] = None) -> bytes:
    """
    Read a binary blob.

    Raises:
        FileNotFoundError: If file does not exist
    """
    path_obj = ensure_path_exists(path, is_file=True, logger=logger)
    return path_obj.read_bytes()


def parse_support_text(text: str) -> List[int]:
    """
    Parse whitespace-separated 1-based indices, returned sorted.

    Raises:
        InvalidParameterError: On tokens that are not integers or on duplicates

    Examples:
        >>> parse_support_text("6 2\\n")
        [2, 6]
        >>> parse_support_text("")
        []
    """
    tokens = text.split()
    try:
        values = [int(token) for token in tokens]
    except ValueError as e:
        raise InvalidParameterError(f"Support list must contain integers: {e}") from e

    if len(set(values)) != len(values):
        raise InvalidParameterError(f"Support list has duplicate indices: {values}")

    return sorted(values)


def format_support_text(support: List[int]) -> str:
    """
    Inverse of parse_support_text (single line, space separated).

    Examples:
        >>> format_support_text([2, 6])
        '2 6'
    """
    return " ".join(str(i) for i in support)


# Module-level exports
__all__ = [
    'ensure_path_exists',
    'ensure_directory',
    'to_json_text',
    'save_json',
    'write_bytes',
    'read_bytes',
    'parse_support_text',
    'format_support_text',
]
