"""Configuration management for sliding hull.

Environment variables win over the YAML file, which wins over defaults.
"""

import os
from pathlib import Path
from typing import Any

import yaml

from .exceptions import HullConfigError

ENV_PREFIX = "SLIDING_HULL_"


class ConfigManager:
    """Environment-first configuration with YAML fallback."""

    def __init__(self, config_file: Path | None = None):
        """Initialize configuration manager.

        Args:
            config_file: Path to YAML configuration file (default: config.yaml)
        """
        self.config_file = config_file or Path("config.yaml")
        self._file_config: dict[str, Any] | None = None
        self._load_file_config()

    def get(self, section: str, key: str, default: Any = None) -> Any:
        """Get configuration value with environment variable priority.

        Priority order:
        1. Environment variable (SLIDING_HULL_{SECTION}_{KEY})
        2. YAML configuration file
        3. Default value

        Args:
            section: Configuration section (e.g., "logging", "bench")
            key: Configuration key within the section
            default: Default value if not found

        Returns:
            Configuration value from highest priority source
        """
        env_value = os.environ.get(self._env_name(section, key))
        if env_value is not None:
            return self._parse_env_value(env_value)

        if self._file_config:
            section_config = self._file_config.get(section) or {}
            if key in section_config:
                return section_config[key]

        return default

    def get_int(self, section: str, key: str, default: int) -> int:
        """Get an integer value, rejecting anything that is not one."""
        value = self.get(section, key, default)
        if isinstance(value, bool) or not isinstance(value, int):
            raise HullConfigError(
                f"Configuration '{section}.{key}' must be an integer, got {value!r}"
            )
        return value

    def _env_name(self, section: str, key: str) -> str:
        return f"{ENV_PREFIX}{section.upper()}_{key.upper()}"

    def _load_file_config(self) -> dict | None:
        """Load configuration from YAML file if it exists."""
        if self.config_file.exists():
            try:
                with open(self.config_file) as f:
                    loaded = yaml.safe_load(f)
            except Exception as e:
                raise HullConfigError(f"Failed to load config file: {e}")
            if loaded is not None and not isinstance(loaded, dict):
                raise HullConfigError(
                    "Failed to load config file: top level must be a mapping"
                )
            self._file_config = loaded
            return self._file_config
        return None

    def _parse_env_value(self, value: str) -> Any:
        """Parse environment variable value to bool, int, float or string."""
        if value.lower() in ("true", "yes"):
            return True
        if value.lower() in ("false", "no"):
            return False

        try:
            if "." in value:
                return float(value)
            return int(value)
        except ValueError:
            pass

        return value

    def get_all_config(self) -> dict[str, Any]:
        """Get all configuration values for debugging/logging."""
        all_config = dict(self._file_config) if self._file_config else {}

        for key, value in os.environ.items():
            if key.startswith(ENV_PREFIX):
                rest = key[len(ENV_PREFIX) :]
                section, _, config_key = rest.partition("_")
                if not config_key:
                    continue
                section_config = dict(all_config.get(section.lower()) or {})
                section_config[config_key.lower()] = self._parse_env_value(value)
                all_config[section.lower()] = section_config

        return all_config
