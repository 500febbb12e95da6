"""
Utilities package for LDSC.
"""

from src.utils.logger import setup_logging, get_logger, reset_logging
from src.utils.file_utils import (
    ensure_path_exists,
    ensure_directory,
    to_json_text,
    save_json,
    write_bytes,
    read_bytes,
    parse_support_text,
    format_support_text,
)
from src.utils.log_utils import (
    log_operation_start,
    log_operation_complete,
    log_validation_result,
    log_frame_shape,
    log_level_build,
    log_file_operation,
    log_count_summary,
    log_progress,
    STATUS_SUCCESS,
    STATUS_WARNING,
    STATUS_ERROR,
    STATUS_INFO,
)
from src.utils.validation_utils import (
    validate_integer,
    validate_value_range,
    validate_probability,
    validate_support,
    validate_list_not_empty,
    validate_all,
    raise_if_invalid,
    check_code_parameters,
)
from src.utils.error_utils import (
    safe_execute,
    error_context,
    exit_code_for,
)

__all__ = [
    # Logger utilities
    'setup_logging',
    'get_logger',
    'reset_logging',
    # File utilities
    'ensure_path_exists',
    'ensure_directory',
    'to_json_text',
    'save_json',
    'write_bytes',
    'read_bytes',
    'parse_support_text',
    'format_support_text',
    # Log utilities
    'log_operation_start',
    'log_operation_complete',
    'log_validation_result',
    'log_frame_shape',
    'log_level_build',
    'log_file_operation',
    'log_count_summary',
    'log_progress',
    'STATUS_SUCCESS',
    'STATUS_WARNING',
    'STATUS_ERROR',
    'STATUS_INFO',
    # Validation utilities
    'validate_integer',
    'validate_value_range',
    'validate_probability',
    'validate_support',
    'validate_list_not_empty',
    'validate_all',
    'raise_if_invalid',
    'check_code_parameters',
    # Error utilities
    'safe_execute',
    'error_context',
    'exit_code_for',
]
