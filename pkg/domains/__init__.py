from .enums import (
    HomogeneityTest,
    ProcessKind,
    EntropyEstimator,
    EventFormat,
    ExitCode,
)
from .entities import (
    EventLog,
    DayWindow,
    BinarySeries,
    SuffixStats,
    CausalStateModel,
    ProcessSpec,
    EchoStateModel,
    EntropyEstimate,
    BaselinePredictor,
    CrossValidationResult,
    EvaluationRow,
    EvaluationReport,
    BitflipPoint,
    BitflipSummaryRow,
)

__all__ = [
    "HomogeneityTest",
    "ProcessKind",
    "EntropyEstimator",
    "EventFormat",
    "ExitCode",
    "EventLog",
    "DayWindow",
    "BinarySeries",
    "SuffixStats",
    "CausalStateModel",
    "ProcessSpec",
    "EchoStateModel",
    "EntropyEstimate",
    "BaselinePredictor",
    "CrossValidationResult",
    "EvaluationRow",
    "EvaluationReport",
    "BitflipPoint",
    "BitflipSummaryRow",
]
