# dtos/config_dto.py
"""
Algorithm configuration DTOs
"""
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from config import settings
from domains.enums import EsnFeedback, HomogeneityTest


class CssrConfig(BaseModel):
    """CSSR stopping parameters"""
    model_config = ConfigDict(frozen=True)

    # None means "select by cross-validation"
    history_length: Optional[int] = Field(default=None, ge=0)
    alpha: float = Field(default=settings.CSSR_ALPHA, gt=0.0, lt=1.0)
    test: HomogeneityTest = HomogeneityTest(settings.CSSR_TEST)
    min_count: int = Field(default=settings.CSSR_MIN_COUNT, ge=1)

    def with_length(self, history_length: int) -> "CssrConfig":
        return self.model_copy(update={"history_length": history_length})


class EsnConfig(BaseModel):
    """Echo state network geometry and sampling parameters"""
    model_config = ConfigDict(frozen=True)

    n_inputs: int = Field(default=settings.ESN_INPUTS, ge=1)
    n_reservoir: int = Field(default=settings.ESN_RESERVOIR, ge=1)
    spectral_radius_target: float = Field(default=settings.ESN_SPECTRAL_RADIUS, gt=0.0, lt=1.0)
    weight_interval: Tuple[float, float] = settings.ESN_WEIGHT_INTERVAL
    target_clip: float = Field(default=settings.ESN_TARGET_CLIP, gt=0.0, lt=0.5)
    washout: int = Field(default=settings.ESN_WASHOUT, ge=0)
    feedback: EsnFeedback = EsnFeedback(settings.ESN_FEEDBACK)
    seed: int = Field(default=settings.DEFAULT_SEED, ge=0)

    @field_validator("weight_interval")
    @classmethod
    def validate_interval(cls, v):
        lo, hi = v
        if not lo < hi:
            raise ValueError(f"weight_interval lower bound {lo} must be below upper bound {hi}")
        return v

    def with_seed(self, seed: int) -> "EsnConfig":
        return self.model_copy(update={"seed": int(seed)})
