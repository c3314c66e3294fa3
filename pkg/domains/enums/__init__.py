from .model_enums import HomogeneityTest, ProcessKind, EntropyEstimator, EsnFeedback
from .run_enums import EventFormat, ExitCode

__all__ = [
    "HomogeneityTest",
    "ProcessKind",
    "EntropyEstimator",
    "EsnFeedback",
    "EventFormat",
    "ExitCode",
]
