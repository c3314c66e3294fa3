"""
Run-related enums
"""
from enum import Enum, IntEnum


class EventFormat(str, Enum):
    CSV = "csv"
    JSONL = "jsonl"

    @classmethod
    def from_path(cls, path: str) -> "EventFormat":
        """Guess the event format from a file name"""
        lowered = str(path).lower()
        if lowered.endswith(".jsonl") or lowered.endswith(".json"):
            return cls.JSONL
        return cls.CSV


class ExitCode(IntEnum):
    OK = 0
    USAGE = 1
    DATA = 2
    NUMERICAL = 3

    @classmethod
    def from_exception(cls, error: BaseException) -> "ExitCode":
        """Map an exception to the process exit code"""
        # Local imports keep enums free of package-level dependencies
        from pydantic import ValidationError
        from core.exceptions import (
            ArgumentError,
            ConfigurationError,
            DataError,
            ModelStateError,
            NumericalError,
        )

        if isinstance(error, NumericalError):
            return cls.NUMERICAL
        if isinstance(error, (DataError, FileNotFoundError)):
            return cls.DATA
        if isinstance(error, (ConfigurationError, ArgumentError, ModelStateError, ValidationError)):
            return cls.USAGE
        return cls.DATA
