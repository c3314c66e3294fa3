"""
Evaluation domain entities
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np


@dataclass(frozen=True, eq=False)
class EntropyEstimate:
    """Block entropies H_L = H[X_1..X_L] / L for L = 1..L_used"""
    block_entropies: np.ndarray
    conditional_entropies: np.ndarray
    h: float
    L_used: int
    plateau: bool

    def table(self) -> List[Dict[str, float]]:
        return [
            {"L": L, "H_L": float(H)}
            for L, H in enumerate(self.block_entropies, start=1)
        ]


@dataclass(frozen=True)
class BaselinePredictor:
    """Majority-vote predictor fitted on the training fraction of ones"""
    p_hat: float
    prediction: int


@dataclass(frozen=True)
class CrossValidationResult:
    """Mean held-out accuracy per candidate history length"""
    selected_L: int
    mean_accuracy: Dict[int, float]
    n_folds: int
    fold_train_length: int


@dataclass
class EvaluationRow:
    """Per-series evaluation results"""
    series_id: str
    tweet_rate: float
    baseline_accuracy: float
    csm_accuracy: Optional[float]
    esn_accuracy: Optional[float]
    selected_L: Optional[int]
    statistical_complexity: Optional[float]
    h_train: float
    h_test: float
    n_states: Optional[int] = None
    quartile: Optional[int] = None
    error: Optional[str] = None

    @property
    def csm_improvement(self) -> Optional[float]:
        if self.csm_accuracy is None:
            return None
        return self.csm_accuracy - self.baseline_accuracy

    @property
    def esn_improvement(self) -> Optional[float]:
        if self.esn_accuracy is None:
            return None
        return self.esn_accuracy - self.baseline_accuracy

    @property
    def abs_entropy_diff(self) -> float:
        return abs(self.h_train - self.h_test)

    @property
    def accuracy_difference(self) -> Optional[float]:
        """csm - esn accuracy"""
        if self.csm_accuracy is None or self.esn_accuracy is None:
            return None
        return self.csm_accuracy - self.esn_accuracy


@dataclass
class EvaluationReport:
    """Collection of rows plus per-quartile mean accuracy differences"""
    rows: List[EvaluationRow] = field(default_factory=list)
    quartile_means: Dict[int, Optional[float]] = field(default_factory=dict)

    def sorted_rows(self) -> List[EvaluationRow]:
        return sorted(self.rows, key=lambda r: r.series_id)


@dataclass(frozen=True)
class BitflipPoint:
    """Accuracy of both models on a copy corrupted with proportion q"""
    q: float
    csm_accuracy: Optional[float]
    esn_accuracy: Optional[float]


@dataclass(frozen=True)
class BitflipSummaryRow:
    q: float
    csm_mean: float
    csm_sd: float
    esn_mean: float
    esn_sd: float
