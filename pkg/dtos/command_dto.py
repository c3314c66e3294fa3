# dtos/command_dto.py
"""
CLI request DTOs, validated before a command does any work
"""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from config import settings
from domains.entities import DayWindow
from domains.enums import EntropyEstimator, EsnFeedback, EventFormat, HomogeneityTest, ProcessKind
from dtos.config_dto import CssrConfig, EsnConfig


class RunConfig(BaseModel):
    """Options shared by every command"""
    out: str
    seed: int = Field(default=settings.DEFAULT_SEED, ge=0)
    jobs: int = Field(default=settings.MAX_WORKERS, ge=1)


class ModelOptions(RunConfig):
    """CSSR and network parameters"""
    series: str
    alpha: float = Field(default=settings.CSSR_ALPHA, gt=0.0, lt=1.0)
    test: HomogeneityTest = HomogeneityTest(settings.CSSR_TEST)
    L: Optional[int] = Field(default=None, ge=0)
    folds: int = Field(default=settings.DEFAULT_FOLDS, ge=2)
    reservoir_size: int = Field(default=settings.ESN_RESERVOIR, ge=1)
    spectral_radius: float = Field(default=settings.ESN_SPECTRAL_RADIUS, gt=0.0, lt=1.0)
    weight_low: float = settings.ESN_WEIGHT_INTERVAL[0]
    weight_high: float = settings.ESN_WEIGHT_INTERVAL[1]
    feedback: EsnFeedback = EsnFeedback(settings.ESN_FEEDBACK)

    def cssr_config(self) -> CssrConfig:
        return CssrConfig(history_length=self.L, alpha=self.alpha, test=self.test)

    def esn_config(self) -> EsnConfig:
        return EsnConfig(
            n_reservoir=self.reservoir_size,
            spectral_radius_target=self.spectral_radius,
            weight_interval=(self.weight_low, self.weight_high),
            feedback=self.feedback,
            seed=self.seed,
        )


class EncodeRequestDTO(RunConfig):
    """events file -> series file"""
    events: str
    dt: int = Field(default=settings.DEFAULT_BIN_SECONDS, ge=1)
    window_start: int = Field(default=settings.DEFAULT_WINDOW_START, ge=0)
    window_end: int = Field(default=settings.DEFAULT_WINDOW_END, ge=1)
    t0: Optional[int] = Field(default=None, ge=0)
    n_days: Optional[int] = Field(default=None, ge=1)
    coarsen: int = Field(default=1, ge=1)
    event_format: Optional[EventFormat] = None
    rates_out: Optional[str] = None

    @model_validator(mode="after")
    def validate_geometry(self):
        bins = self.window().bins(self.dt)
        if bins % self.coarsen:
            raise ValueError(f"Coarsening factor {self.coarsen} does not divide {bins} bins per day")
        return self

    def window(self) -> DayWindow:
        return DayWindow(self.window_start, self.window_end)


class EvaluateRequestDTO(ModelOptions):
    """series file -> evaluation report"""
    train_days: int = Field(default=settings.DEFAULT_TRAIN_DAYS, ge=1)
    estimator: EntropyEstimator = EntropyEstimator.PER_SYMBOL

    @model_validator(mode="after")
    def validate_folds(self):
        if self.L is None and self.train_days % self.folds:
            raise ValueError(
                f"{self.train_days} training days cannot be split into {self.folds} folds"
            )
        return self


class BitflipRequestDTO(ModelOptions):
    """series file -> bit-flip curve"""
    q_grid: List[float] = Field(min_length=1)
    tables_out: Optional[str] = None

    @field_validator("q_grid")
    @classmethod
    def validate_q_grid(cls, v):
        bad = [q for q in v if not 0.0 <= q <= 1.0]
        if bad:
            raise ValueError(f"q values outside [0, 1]: {bad}")
        return v


class CvRequestDTO(ModelOptions):
    """series file -> per-L cross-validation accuracies"""
    train_days: int = Field(default=settings.DEFAULT_TRAIN_DAYS, ge=1)

    @model_validator(mode="after")
    def validate_folds(self):
        if self.train_days % self.folds:
            raise ValueError(
                f"{self.train_days} training days cannot be split into {self.folds} folds"
            )
        return self


class InferRequestDTO(ModelOptions):
    """series file -> causal state model JSON and network JSON for one user"""
    user: Optional[str] = None
    esn_out: Optional[str] = None
    train_days: Optional[int] = Field(default=None, ge=1)


class SynthRequestDTO(RunConfig):
    """spec parameters -> synthetic series file"""
    kind: ProcessKind
    n_users: int = Field(default=1, ge=1)
    n_days: int = Field(default=settings.DEFAULT_N_DAYS, ge=1)
    bins_per_day: int = Field(default=96, ge=1)
    dt: int = Field(default=settings.DEFAULT_BIN_SECONDS, ge=1)
    pattern: Optional[str] = None
    params: Dict[str, float] = Field(default_factory=dict)
    spec_out: Optional[str] = None

    @field_validator("params", mode="before")
    @classmethod
    def collect_params(cls, v):
        # repeated --param flags arrive as (name, value) pairs
        if isinstance(v, (list, tuple)):
            return dict(v)
        return v

    @model_validator(mode="after")
    def validate_pattern(self):
        if self.kind is ProcessKind.PERIODIC and not self.pattern:
            raise ValueError("periodic processes need --pattern")
        if self.kind is not ProcessKind.PERIODIC and self.pattern:
            raise ValueError("--pattern only applies to periodic processes")
        return self


class RasterRequestDTO(RunConfig):
    """series file -> rastergram"""
    series: str
    user: Optional[str] = None
    image: Optional[str] = None


class EntropyRequestDTO(RunConfig):
    """series file -> L,H_L table"""
    series: str
    user: Optional[str] = None
    L_max: Optional[int] = Field(default=None, ge=1)
    estimator: EntropyEstimator = EntropyEstimator.PER_SYMBOL
