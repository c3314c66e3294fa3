# dtos/report_dto.py
"""
Report row DTOs; field order is the CSV column order
"""
from typing import Any, Dict, Optional

from pydantic import BaseModel, Field

from domains.entities import BitflipSummaryRow, EvaluationRow


class EvaluationRowDTO(BaseModel):
    """One row of the evaluation report CSV"""
    series_id: str
    tweet_rate: float = Field(ge=0.0, le=1.0)
    baseline_acc: float = Field(ge=0.0, le=1.0)
    csm_acc: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    esn_acc: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    csm_improvement: Optional[float] = None
    esn_improvement: Optional[float] = None
    selected_L: Optional[int] = None
    stat_complexity: Optional[float] = None
    h_train: float
    h_test: float
    abs_entropy_diff: float
    quartile: Optional[int] = Field(default=None, ge=1, le=4)

    @classmethod
    def from_row(cls, row: EvaluationRow) -> "EvaluationRowDTO":
        return cls(
            series_id=row.series_id,
            tweet_rate=row.tweet_rate,
            baseline_acc=row.baseline_accuracy,
            csm_acc=row.csm_accuracy,
            esn_acc=row.esn_accuracy,
            csm_improvement=row.csm_improvement,
            esn_improvement=row.esn_improvement,
            selected_L=row.selected_L,
            stat_complexity=row.statistical_complexity,
            h_train=row.h_train,
            h_test=row.h_test,
            abs_entropy_diff=row.abs_entropy_diff,
            quartile=row.quartile,
        )


class BitflipSummaryDTO(BaseModel):
    """One row of the bit-flip CSV"""
    q: float
    csm_mean: float
    csm_sd: float
    esn_mean: float
    esn_sd: float

    @classmethod
    def from_row(cls, row: BitflipSummaryRow) -> "BitflipSummaryDTO":
        return cls(
            q=row.q,
            csm_mean=row.csm_mean,
            csm_sd=row.csm_sd,
            esn_mean=row.esn_mean,
            esn_sd=row.esn_sd,
        )


class EvaluationSummaryDTO(BaseModel):
    """Side-car JSON written next to an evaluation report"""
    n_series: int
    n_failed: int
    quartile_means: Dict[int, Optional[float]] = Field(default_factory=dict)
    tweet_rate_groups: Dict[str, Dict[str, Any]] = Field(default_factory=dict)
    top_outperformers: Dict[str, Dict[str, Any]] = Field(default_factory=dict)
    state_census: Dict[int, Dict[str, float]] = Field(default_factory=dict)
