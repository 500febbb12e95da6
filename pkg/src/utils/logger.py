"""
Logging configuration module for LDSC
Supports log levels: DEBUG, INFO, WARNING, ERROR, CRITICAL

Log records go to stderr; stdout is reserved for command output.
"""

import logging
import os
import sys
from datetime import datetime
from typing import Optional, Dict

from pythonjsonlogger.json import JsonFormatter

# Store the configured log level globally
_LOG_LEVEL = None

# Handlers installed by setup_logging (others, e.g. pytest's, are left alone)
_INSTALLED_HANDLERS = []

_TEXT_FORMAT = '%(asctime)s - [%(levelname)s] - %(name)s - %(message)s'
_JSON_FIELDS = '%(asctime)s %(levelname)s %(name)s %(message)s'
_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

# Example usage in modules:
# logger.debug("Level build details, probe traces")          # Level 10 - Most verbose
# logger.info("Experiment start/complete")                   # Level 20
# logger.warning("Fallbacks (bound unavailable)")            # Level 30
# logger.error("Before raising computational failures")      # Level 40


def _build_formatter(log_format: str) -> logging.Formatter:
    if log_format == 'json':
        return JsonFormatter(_JSON_FIELDS, datefmt=_DATE_FORMAT)
    return logging.Formatter(_TEXT_FORMAT, datefmt=_DATE_FORMAT)


def setup_logging(log_level: str = 'INFO', config: Optional[Dict] = None) -> Optional[str]:
    """
    Configure logging for the entire application

    Args:
        log_level: One of 'DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'
        config: Optional configuration dictionary. 'run_name' adds a log file at
                logs/{run_name}_{YYYYmmdd_HHMMSS}.log; 'log_format' == 'json'
                switches every handler to JSON lines.

    Returns:
        Path to log file if created, otherwise None

    Example:
        setup_logging('DEBUG', {'run_name': 'scaling'})  # stderr + log file
        setup_logging('INFO')  # stderr only
    """
    global _LOG_LEVEL

    log_level = (log_level or 'INFO').upper()
    valid_levels = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']
    if log_level not in valid_levels:
        log_level = 'INFO'

    _LOG_LEVEL = getattr(logging, log_level)
    config = config or {}

    root_logger = logging.getLogger()
    for handler in _INSTALLED_HANDLERS:
        root_logger.removeHandler(handler)
        handler.close()
    _INSTALLED_HANDLERS.clear()

    root_logger.setLevel(_LOG_LEVEL)
    formatter = _build_formatter(config.get('log_format', 'text'))

    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setLevel(_LOG_LEVEL)
    stream_handler.setFormatter(formatter)
    root_logger.addHandler(stream_handler)
    _INSTALLED_HANDLERS.append(stream_handler)

    log_file_path = None
    if config.get('run_name'):
        logs_dir = 'logs'
        os.makedirs(logs_dir, exist_ok=True)

        timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
        run_name = str(config['run_name']).replace(" ", "")
        log_file_path = os.path.join(logs_dir, f"{run_name}_{timestamp}.log")

        file_handler = logging.FileHandler(log_file_path, mode='w', encoding='utf-8')
        file_handler.setLevel(_LOG_LEVEL)
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)
        _INSTALLED_HANDLERS.append(file_handler)

    # Suppress noisy third-party library logs
    logging.getLogger('openpyxl').setLevel(logging.WARNING)

    return log_file_path


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger for a specific module

    Args:
        name: Module name (usually __name__)

    Returns:
        Configured logger instance

    Example:
        logger = get_logger(__name__)
        logger.debug("Debug message")
    """
    logger = logging.getLogger(name)

    # If logging hasn't been set up yet, use INFO as default
    if _LOG_LEVEL is None:
        setup_logging('INFO')

    return logger


def reset_logging() -> None:
    """Remove the handlers installed by setup_logging (root level is kept)."""
    root_logger = logging.getLogger()
    for handler in _INSTALLED_HANDLERS:
        root_logger.removeHandler(handler)
        handler.close()
    _INSTALLED_HANDLERS.clear()
