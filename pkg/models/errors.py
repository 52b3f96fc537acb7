"""
Error family for the offload evaluator.
Every error carries a category tag and the CLI exit code for it.
"""
from typing import Optional


class OffloadError(Exception):
    """Base error for everything raised by this package."""

    category = "runtime"
    exit_code = 1


class ConfigParseError(OffloadError):
    """Experiment file could not be parsed."""

    category = "parse"
    exit_code = 2

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        location = ""
        if path is not None:
            location = f"{path}"
            if line is not None:
                location += f":{line}"
            location += ": "
        super().__init__(f"{location}{message}")


class ConfigValidationError(OffloadError, ValueError):
    """Configuration parsed but violates an invariant."""

    category = "validation"
    exit_code = 2


class DomainError(OffloadError, ValueError):
    """Argument outside the domain of a numerical or model operation."""

    category = "domain"
    exit_code = 3


class ConvergenceError(OffloadError, ArithmeticError):
    """Iterative numerical routine ran out of its evaluation budget."""

    category = "numerics"
    exit_code = 3


class OutputError(OffloadError, OSError):
    """Result file could not be written."""

    category = "io"
    exit_code = 4

    def __init__(self, message: str, path: str):
        self.path = path
        super().__init__(f"{path}: {message}")
