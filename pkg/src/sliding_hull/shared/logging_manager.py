"""Structured JSON logging for sliding hull.

Logging is off unless ``logging.enabled`` is set (env var
SLIDING_HULL_LOGGING_ENABLED or config.yaml).
"""

import json
import logging
import sys
from datetime import UTC, datetime

from .config_manager import ConfigManager
from .utils import get_trace_id

ROOT_LOGGER = "sliding_hull"
TEST_ROOT_LOGGER = "sliding_hull_test"


def _root_name() -> str:
    return TEST_ROOT_LOGGER if "pytest" in sys.modules else ROOT_LOGGER


class LoggingManager:
    """Manages logging configuration with feature flag support."""

    def __init__(self, config: ConfigManager | None = None):
        """Initialize logging manager.

        Args:
            config: Configuration manager instance (created lazily if None)
        """
        self._config = config
        self._initialized = False

    @property
    def config(self) -> ConfigManager:
        if self._config is None:
            self._config = ConfigManager()
        return self._config

    def configure(self) -> None:
        """Configure the package logger according to settings.

        Reads:
        - SLIDING_HULL_LOGGING_ENABLED: Whether logging is enabled (default: False)
        - SLIDING_HULL_LOGGING_LEVEL: Log level (default: INFO)
        """
        if self._initialized:
            return

        is_test = "pytest" in sys.modules
        logging_enabled = self.config.get("logging", "enabled", False)
        logger = logging.getLogger(_root_name())

        if logging_enabled and not is_test:
            log_level_str = str(self.config.get("logging", "level", "INFO"))
            log_level = getattr(logging, log_level_str.upper(), logging.INFO)
            logger.setLevel(log_level)

            for handler in logger.handlers[:]:
                logger.removeHandler(handler)

            # stderr keeps trace output on stdout clean
            handler = logging.StreamHandler(sys.stderr)
            handler.setLevel(log_level)
            handler.setFormatter(JSONFormatter())
            logger.addHandler(handler)
            logger.propagate = False
        else:
            logger.setLevel(logging.ERROR)

        self._initialized = True

    def get_logger(self, name: str) -> logging.Logger:
        """Get a logger below the package root.

        Args:
            name: Logger name (typically __name__)

        Returns:
            Logger instance
        """
        if name == ROOT_LOGGER or name.startswith(ROOT_LOGGER + "."):
            name = name[len(ROOT_LOGGER) :].lstrip(".")
        root = _root_name()
        return logging.getLogger(f"{root}.{name}" if name else root)


class JSONFormatter(logging.Formatter):
    """Formatter that renders each record as one JSON object."""

    def format(self, record: logging.LogRecord) -> str:
        """Format log record as JSON.

        Args:
            record: Log record

        Returns:
            JSON-formatted log entry
        """
        module_parts = record.name.split(".")

        log_entry = {
            "timestamp": datetime.now(UTC).isoformat(),
            "trace_id": getattr(record, "trace_id", None) or get_trace_id(),
            "level": record.levelname,
            "module": module_parts[-1],
            "message": record.getMessage(),
        }

        if record.exc_info:
            log_entry["exception"] = self.formatException(record.exc_info)

        extra = getattr(record, "extra", None)
        if isinstance(extra, dict):
            log_entry.update(extra)

        return json.dumps(log_entry, default=str)


_manager = LoggingManager()


def configure_logging(config: ConfigManager | None = None) -> None:
    """Configure logging system (convenience function)."""
    if config is not None and not _manager._initialized:
        _manager._config = config
    _manager.configure()


def get_logger(name: str) -> logging.Logger:
    """Get a package logger (convenience function).

    Args:
        name: Logger name (typically __name__)

    Returns:
        Logger instance
    """
    return _manager.get_logger(name)
