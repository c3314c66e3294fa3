# core/exceptions.py
"""
Exception hierarchy shared by every module
"""
from typing import Any, Dict, Optional


class PointProcessError(Exception):
    """Base class for all library errors"""


class ConfigurationError(PointProcessError, ValueError):
    """Geometry or parameter preconditions violated"""


class ArgumentError(PointProcessError, ValueError):
    """Invalid argument value"""


class ModelStateError(PointProcessError):
    """Operation requires a trained model"""


class DataError(PointProcessError):
    """Malformed or insufficient data"""


class NumericalError(PointProcessError, ArithmeticError):
    """Iterative computation failed to converge"""

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}

    def __str__(self) -> str:
        base = super().__str__()
        if not self.diagnostics:
            return base
        details = ", ".join(f"{k}={v}" for k, v in self.diagnostics.items())
        return f"{base} ({details})"
