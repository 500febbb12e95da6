"""
LDSC Configuration Manager

This module provides configuration management for user and runtime configs.

Responsibilities:
- Build the user configuration (defaults <- .env / LDSC_* environment <- explicit overrides)
- Store user configuration (immutable)
- Manage runtime configuration per experiment
- Provide config access methods

Does NOT:
- Validate codebook parameters (CodeParams does this)
- Configure logging (use logger.setup_logging)
"""

import os
from typing import Dict, Any, Optional, Mapping
from dotenv import dotenv_values
from src.core import constants
from src.utils.logger import get_logger

logger = get_logger(__name__)

# Keys recognised in the user configuration and their coercions
_KNOWN_KEYS = {
    'log_level': str,
    'log_format': str,
    'run_name': str,
    'seed': int,
    'trials': int,
    'output_dir': str,
}

DEFAULT_USER_CONFIG: Dict[str, Any] = {
    'log_level': constants.DEFAULT_LOG_LEVEL,
    'log_format': 'text',
    'seed': constants.DEFAULT_MASTER_SEED,
    'trials': constants.DEFAULT_TRIALS,
    'output_dir': constants.DEFAULT_OUTPUT_DIR,
}


def load_environment_config(dotenv_path: Optional[str] = None,
                            environ: Optional[Mapping[str, str]] = None) -> Dict[str, Any]:
    """
    Collect LDSC_* settings from a .env file and the process environment.

    The process environment wins over the .env file. Unknown keys are ignored.

    Args:
        dotenv_path: Path to a .env file (default: ./.env if present)
        environ: Environment mapping (default: os.environ)

    Returns:
        Dict of recognised keys with coerced values
    """
    environ = os.environ if environ is None else environ
    path = dotenv_path or '.env'
    merged: Dict[str, Optional[str]] = {}
    if os.path.exists(path):
        merged.update(dotenv_values(path))
    merged.update(environ)

    settings: Dict[str, Any] = {}
    for raw_key, raw_value in merged.items():
        if not raw_key.startswith(constants.ENV_PREFIX) or raw_value is None:
            continue
        key = raw_key[len(constants.ENV_PREFIX):].lower()
        if key not in _KNOWN_KEYS:
            continue
        try:
            settings[key] = _KNOWN_KEYS[key](raw_value)
        except ValueError:
            logger.warning(f"Ignoring {raw_key}={raw_value!r}: expected {_KNOWN_KEYS[key].__name__}")
    return settings


class ConfigManager:
    """
    Manages user and runtime configuration.

    Attributes:
        _user_config (Dict): User-provided configuration (immutable)
        _runtime_config (Dict[str, Dict]): Runtime configuration per experiment
    """

    def __init__(self, user_config: Dict[str, Any]):
        """
        Initialize with user configuration.

        Args:
            user_config: User-provided configuration (stored as immutable copy)
        """
        self._user_config = user_config.copy()
        self._runtime_config: Dict[str, Dict] = {}

        logger.debug(f"ConfigManager initialized with {len(user_config)} user config keys")

    @classmethod
    def from_sources(cls,
                     overrides: Optional[Dict[str, Any]] = None,
                     dotenv_path: Optional[str] = None,
                     environ: Optional[Mapping[str, str]] = None) -> 'ConfigManager':
        """
        Layer defaults, environment and explicit overrides (None values skipped).

        Args:
            overrides: Explicit settings, e.g. from CLI options
            dotenv_path: Optional .env path
            environ: Optional environment mapping

        Returns:
            ConfigManager with the merged user configuration
        """
        config = DEFAULT_USER_CONFIG.copy()
        config.update(load_environment_config(dotenv_path, environ))
        if overrides:
            config.update({k: v for k, v in overrides.items() if v is not None})
        return cls(config)

    # ==================== User Config Access ====================

    def get_user_config(self, key: str, default: Any = None) -> Any:
        """
        Get value from user config.

        Args:
            key: Configuration key
            default: Default value if key not found

        Returns:
            Configuration value or default
        """
        return self._user_config.get(key, default)

    def get_all_user_config(self) -> Dict:
        """
        Get complete user config (read-only copy).

        Returns:
            Copy of user configuration
        """
        return self._user_config.copy()

    # ==================== Runtime Config Management ====================

    def set_runtime_config(self, experiment: str, config: Dict) -> None:
        """
        Set runtime config for an experiment.

        Args:
            experiment: Experiment identifier ('mc', 'scaling', ...)
            config: Runtime configuration dictionary
        """
        self._runtime_config[experiment] = config.copy()
        logger.debug(f"Runtime config set for '{experiment}' with {len(config)} keys")

    def merge_runtime_config(self, experiment: str, updates: Dict) -> None:
        """
        Merge updates into runtime config.

        Args:
            experiment: Experiment identifier
            updates: Configuration dictionary to merge
        """
        if experiment not in self._runtime_config:
            self._runtime_config[experiment] = {}

        self._runtime_config[experiment].update(updates)
        logger.debug(f"Runtime config updated for '{experiment}' with {len(updates)} updates")

    # ==================== Combined Access ====================

    def get_effective_config(self, experiment: str) -> Dict:
        """
        Get merged user + runtime config for an experiment.

        Runtime config takes precedence over user config for overlapping keys.

        Args:
            experiment: Experiment identifier

        Returns:
            Merged configuration dictionary
        """
        effective = self._user_config.copy()

        runtime_config = self._runtime_config.get(experiment)
        if runtime_config:
            effective.update(runtime_config)

        return effective

    def __repr__(self) -> str:
        """String representation."""
        return (f"ConfigManager(user_keys={len(self._user_config)}, "
                f"experiments={len(self._runtime_config)})")
