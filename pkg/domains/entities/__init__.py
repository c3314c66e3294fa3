from .series_entities import EventLog, DayWindow, BinarySeries
from .machine_entities import SuffixStats, CausalStateModel, ProcessSpec, SYMBOLS
from .network_entities import EchoStateModel
from .evaluation_entities import (
    EntropyEstimate,
    BaselinePredictor,
    CrossValidationResult,
    EvaluationRow,
    EvaluationReport,
    BitflipPoint,
    BitflipSummaryRow,
)

__all__ = [
    "EventLog",
    "DayWindow",
    "BinarySeries",
    "SuffixStats",
    "CausalStateModel",
    "ProcessSpec",
    "SYMBOLS",
    "EchoStateModel",
    "EntropyEstimate",
    "BaselinePredictor",
    "CrossValidationResult",
    "EvaluationRow",
    "EvaluationReport",
    "BitflipPoint",
    "BitflipSummaryRow",
]
