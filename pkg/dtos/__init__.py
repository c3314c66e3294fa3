# dtos/__init__.py
from .config_dto import CssrConfig, EsnConfig
from .model_dto import (
    TransitionDTO,
    CausalStateModelDTO,
    EchoStateModelDTO,
    EventLogDTO,
)
from .report_dto import (
    EvaluationRowDTO,
    BitflipSummaryDTO,
    EvaluationSummaryDTO,
)
from .command_dto import (
    RunConfig,
    ModelOptions,
    EncodeRequestDTO,
    EvaluateRequestDTO,
    BitflipRequestDTO,
    CvRequestDTO,
    InferRequestDTO,
    SynthRequestDTO,
    RasterRequestDTO,
    EntropyRequestDTO,
)

__all__ = [
    # Algorithm configs
    "CssrConfig",
    "EsnConfig",
    # Persisted models
    "TransitionDTO",
    "CausalStateModelDTO",
    "EchoStateModelDTO",
    "EventLogDTO",
    # Reports
    "EvaluationRowDTO",
    "BitflipSummaryDTO",
    "EvaluationSummaryDTO",
    # Command requests
    "RunConfig",
    "ModelOptions",
    "EncodeRequestDTO",
    "EvaluateRequestDTO",
    "BitflipRequestDTO",
    "CvRequestDTO",
    "InferRequestDTO",
    "SynthRequestDTO",
    "RasterRequestDTO",
    "EntropyRequestDTO",
]
