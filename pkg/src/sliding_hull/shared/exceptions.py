"""Error hierarchy for the sliding hull library and its command-line driver.

Library code raises the ``HullError`` subclasses below. Command functions are
wrapped with ``handle_hull_exceptions`` so that every failure leaves the CLI
as a ``HullCommandError`` carrying the process exit code.
"""

from collections.abc import Callable
from functools import wraps
from typing import Any

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class HullError(Exception):
    """Base exception for sliding hull operations."""

    code = "error"


class HullContractError(HullError):
    """An update or query contract was violated by the caller."""

    code = "contract"


class EmptyWindowError(HullContractError):
    """Operation needs at least one live point."""

    code = "empty_window"


class XOrderError(HullContractError):
    """Inserted point is not strictly right of every live point."""

    code = "x_order"


class HullValidationError(HullError):
    """Malformed query or polygon input."""

    code = "invalid_input"


class NotOutsideError(HullValidationError):
    """Tangent query from a point that is inside or on the hull."""

    code = "not_outside"


class HullInternalError(HullError):
    """An engine invariant was broken. Indicates a bug, never user error."""

    code = "internal"


class HullConfigError(HullError):
    """Configuration validation errors."""

    code = "config"


class TraceParseError(HullError):
    """Malformed trace line."""

    code = "parse"

    def __init__(self, message: str, line: int, column: int = 1):
        """Initialize parse error with the offending position."""
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class HullCommandError(Exception):
    """Failure of a CLI command, ready to be turned into an exit code."""

    def __init__(self, message: str, exit_code: int = EXIT_USAGE):
        """Initialize command error with its exit code."""
        super().__init__(message)
        self.exit_code = exit_code


def handle_hull_exceptions(
    func: Callable[..., Any] | None = None,
    *,
    default_message: str = "Command failed",
) -> Callable[..., Any]:
    """Decorator converting library errors into ``HullCommandError``.

    Args:
        func: Function to wrap (provided by decoration)
        default_message: Prefix for unexpected errors

    Returns:
        Decorated function that raises only ``HullCommandError``
    """

    def decorator(wrapped_func: Callable[..., Any]) -> Callable[..., Any]:
        @wraps(wrapped_func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            try:
                return wrapped_func(*args, **kwargs)
            except HullCommandError:
                raise
            except TraceParseError as e:
                raise HullCommandError(f"Parse error: {e}", EXIT_USAGE)
            except HullConfigError as e:
                raise HullCommandError(f"Configuration error: {e}", EXIT_USAGE)
            except HullValidationError as e:
                raise HullCommandError(f"Validation error: {e}", EXIT_USAGE)
            except HullContractError as e:
                raise HullCommandError(f"Contract violation: {e}", EXIT_USAGE)
            except HullInternalError as e:
                raise HullCommandError(f"Internal error: {e}", EXIT_MISMATCH)
            except OSError as e:
                raise HullCommandError(f"I/O error: {e}", EXIT_USAGE)
            except Exception as e:
                raise HullCommandError(f"{default_message}: {e}", EXIT_MISMATCH)

        return wrapper

    if func is None:
        # Called with parameters: @handle_hull_exceptions(default_message="...")
        return decorator
    # Called without parameters: @handle_hull_exceptions
    return decorator(func)
