# services/evaluation_service.py
"""
Evaluation pipeline: baseline, cross-validation, head-to-head comparison,
entropy-divergence quartiles and the bit-flip experiment
"""
from dataclasses import replace
from typing import Any, Dict, List, Optional, Sequence
import logging

import numpy as np

from config import settings
from core.exceptions import ArgumentError, ConfigurationError, DataError
from domains.entities import (
    BaselinePredictor,
    BinarySeries,
    BitflipPoint,
    BitflipSummaryRow,
    CrossValidationResult,
    EvaluationReport,
    EvaluationRow,
)
from domains.enums import EntropyEstimator
from dtos.config_dto import CssrConfig, EsnConfig
from services.cssr_service import CssrService
from services.encoding_service import EncodingService
from services.esn_service import EsnService
from services.infotheory_service import InfoTheoryService
from utils.monitoring import measure_time, track_metric
from utils.seeding import derive_seed

logger = logging.getLogger(__name__)


def _mean(values: Sequence[Optional[float]]) -> Optional[float]:
    present = [v for v in values if v is not None]
    return float(np.mean(present)) if present else None


def _median(values: Sequence[Optional[float]]) -> Optional[float]:
    present = [v for v in values if v is not None]
    return float(np.median(present)) if present else None


class EvaluationService:
    """Runs the comparison pipeline for one configuration"""

    def __init__(
        self,
        cssr_config: Optional[CssrConfig] = None,
        esn_config: Optional[EsnConfig] = None,
        n_folds: int = settings.DEFAULT_FOLDS,
        estimator: EntropyEstimator = EntropyEstimator.PER_SYMBOL,
    ):
        self.cssr_config = cssr_config or CssrConfig()
        self.esn_config = esn_config or EsnConfig()
        self.n_folds = n_folds
        self.estimator = EntropyEstimator(estimator)

    # -- building blocks ----------------------------------------------------

    @staticmethod
    def baseline_fit(train: BinarySeries) -> BaselinePredictor:
        """Majority vote; p_hat of exactly 1/2 predicts 0"""
        if len(train) == 0:
            raise DataError("Cannot fit a baseline on an empty series")
        p_hat = float(train.bits.mean())
        return BaselinePredictor(p_hat=p_hat, prediction=int(p_hat > 0.5))

    @staticmethod
    def accuracy(predicted, actual) -> float:
        """Mean zero-one agreement"""
        predicted = np.asarray(predicted).ravel()
        actual = np.asarray(actual).ravel()
        if predicted.size != actual.size:
            raise ArgumentError(
                f"Prediction length {predicted.size} differs from data length {actual.size}"
            )
        if actual.size == 0:
            raise ArgumentError("Accuracy of an empty sequence is undefined")
        return float(np.mean(predicted == actual))

    @staticmethod
    def baseline_accuracy(baseline: BaselinePredictor, series: BinarySeries) -> float:
        return EvaluationService.accuracy(np.full(len(series), baseline.prediction), series.bits)

    @staticmethod
    def fold_count(n_days: int, n_folds: int) -> int:
        """Largest fold count <= n_folds (and >= 2) dividing n_days"""
        for folds in range(min(n_folds, n_days), 1, -1):
            if n_days % folds == 0:
                return folds
        raise ConfigurationError(f"No fold count in [2, {n_folds}] divides {n_days} days")

    @staticmethod
    @measure_time("cross_validation")
    def cross_validate_history(
        train: BinarySeries,
        n_folds: int = settings.DEFAULT_FOLDS,
        config: Optional[CssrConfig] = None,
    ) -> CrossValidationResult:
        """
        Pick the history length maximizing mean held-out accuracy over
        contiguous day-block folds; ties go to the smallest L.
        """
        config = config or CssrConfig()
        if n_folds < 2 or train.n_days % n_folds:
            raise ConfigurationError(
                f"{train.n_days} training days cannot be split into {n_folds} folds"
            )
        fold_days = train.n_days // n_folds
        fold_train_length = (n_folds - 1) * fold_days * train.bins_per_day
        L_cap = min(
            InfoTheoryService.max_history_length(fold_train_length),
            train.bins_per_day - 1,
        )

        folds = []
        for k in range(n_folds):
            held = range(k * fold_days, (k + 1) * fold_days)
            rest = [d for d in range(train.n_days) if d not in held]
            folds.append((train.select_days(rest), train.select_days(held)))

        mean_accuracy: Dict[int, float] = {}
        for L in range(L_cap + 1):
            scores = []
            for fit_part, held_part in folds:
                model = CssrService.infer(fit_part, config.with_length(L))
                predicted, _ = CssrService.predict_series(model, held_part)
                scores.append(EvaluationService.accuracy(predicted, held_part.bits))
            mean_accuracy[L] = float(np.mean(scores))

        selected = 0
        for L, score in mean_accuracy.items():
            if score > mean_accuracy[selected] + 1e-12:
                selected = L

        logger.debug(f"CV for {train.series_id!r} selected L={selected} from {mean_accuracy}")
        return CrossValidationResult(
            selected_L=selected,
            mean_accuracy=mean_accuracy,
            n_folds=n_folds,
            fold_train_length=fold_train_length,
        )

    @staticmethod
    def entropy_cap(train: BinarySeries, test: BinarySeries) -> int:
        """Common block cap for train/test entropy rates"""
        n = min(len(train), len(test))
        cap = InfoTheoryService.max_history_length(n) if n >= 2 else 1
        return max(1, min(cap, train.bins_per_day, test.bins_per_day))

    # -- head-to-head -------------------------------------------------------

    @staticmethod
    def evaluate_pair(
        train: BinarySeries,
        test: BinarySeries,
        cssr_config: CssrConfig,
        esn_config: EsnConfig,
        n_folds: int = settings.DEFAULT_FOLDS,
        estimator: EntropyEstimator = EntropyEstimator.PER_SYMBOL,
    ) -> EvaluationRow:
        """Baseline, causal state model and echo state network scored on `test`"""
        if train.bins_per_day != test.bins_per_day or train.bin_seconds != test.bin_seconds:
            raise ConfigurationError("Train and test series have different geometry")

        series_id = train.series_id or test.series_id
        baseline = EvaluationService.baseline_fit(train)
        baseline_acc = EvaluationService.baseline_accuracy(baseline, test)
        tweet_rate = float(
            (train.bits.sum() + test.bits.sum()) / float(len(train) + len(test))
        )
        errors: List[str] = []

        csm_acc = complexity = selected_L = n_states = None
        try:
            L = cssr_config.history_length
            if L is None:
                L = EvaluationService.cross_validate_history(train, n_folds, cssr_config).selected_L
            selected_L = L
            model = CssrService.infer(train, cssr_config.with_length(L))
            predicted, _ = CssrService.predict_series(model, test)
            csm_acc = EvaluationService.accuracy(predicted, test.bits)
            complexity = CssrService.statistical_complexity(model)
            n_states = model.n_states
        except Exception as e:
            logger.error(f"Causal state model failed for {series_id!r}: {e}")
            track_metric("csm_failures", 1)
            errors.append(f"csm: {e}")

        esn_acc = None
        try:
            network = EsnService.train(EsnService.build(esn_config), train)
            predicted, _ = EsnService.predict_sequence(network, test)
            esn_acc = EvaluationService.accuracy(predicted, test.bits)
        except Exception as e:
            logger.error(f"Echo state network failed for {series_id!r}: {e}")
            track_metric("esn_failures", 1)
            errors.append(f"esn: {e}")

        cap = EvaluationService.entropy_cap(train, test)
        h_train = InfoTheoryService.entropy_rate(train, cap, estimator).h
        h_test = InfoTheoryService.entropy_rate(test, cap, estimator).h

        return EvaluationRow(
            series_id=series_id,
            tweet_rate=tweet_rate,
            baseline_accuracy=baseline_acc,
            csm_accuracy=csm_acc,
            esn_accuracy=esn_acc,
            selected_L=selected_L,
            statistical_complexity=complexity,
            h_train=h_train,
            h_test=h_test,
            n_states=n_states,
            error="; ".join(errors) or None,
        )

    def evaluate_series(self, series: BinarySeries, train_days: int, seed: int) -> EvaluationRow:
        """Chronological split plus evaluate_pair with a per-series network seed"""
        train, test = EncodingService.split_train_test(series, train_days)
        esn_config = self.esn_config.with_seed(derive_seed(seed, series.series_id))
        return self.evaluate_pair(
            train, test, self.cssr_config, esn_config, self.n_folds, self.estimator
        )

    @staticmethod
    def quartile_by_entropy_divergence(rows: Sequence[EvaluationRow]) -> EvaluationReport:
        """
        Quartiles 1-4 by rank of |h_train - h_test| (stable on ties) and the
        mean csm - esn accuracy difference inside each quartile.
        """
        if len(rows) < 4:
            raise DataError(f"Need at least 4 rows for quartiles, got {len(rows)}")
        n = len(rows)
        order = sorted(range(n), key=lambda i: rows[i].abs_entropy_diff)
        labelled: List[Optional[EvaluationRow]] = [None] * n
        for rank, i in enumerate(order):
            labelled[i] = replace(rows[i], quartile=4 * rank // n + 1)

        quartile_means = {
            q: _mean([r.accuracy_difference for r in labelled if r.quartile == q])
            for q in (1, 2, 3, 4)
        }
        return EvaluationReport(rows=list(labelled), quartile_means=quartile_means)

    # -- bit flips ----------------------------------------------------------

    def bitflip_experiment(
        self,
        series: BinarySeries,
        q_grid: Sequence[float],
        seed: int,
    ) -> List[BitflipPoint]:
        """Train both models on the full series, test on corrupted copies of it"""
        bad = [q for q in q_grid if not 0.0 <= q <= 1.0]
        if bad:
            raise ArgumentError(f"q values outside [0, 1]: {bad}")

        model = network = None
        try:
            L = self.cssr_config.history_length
            if L is None:
                folds = self.fold_count(series.n_days, self.n_folds)
                L = self.cross_validate_history(series, folds, self.cssr_config).selected_L
            model = CssrService.infer(series, self.cssr_config.with_length(L))
        except Exception as e:
            logger.error(f"Causal state model failed for {series.series_id!r}: {e}")
        try:
            esn_config = self.esn_config.with_seed(derive_seed(seed, series.series_id))
            network = EsnService.train(EsnService.build(esn_config), series)
        except Exception as e:
            logger.error(f"Echo state network failed for {series.series_id!r}: {e}")

        points = []
        for k, q in enumerate(q_grid):
            flipped = EncodingService.flip_bits(series, q, derive_seed(seed, series.series_id, k))
            csm_acc = esn_acc = None
            if model is not None:
                predicted, _ = CssrService.predict_series(model, flipped)
                csm_acc = self.accuracy(predicted, flipped.bits)
            if network is not None:
                predicted, _ = EsnService.predict_sequence(network, flipped)
                esn_acc = self.accuracy(predicted, flipped.bits)
            points.append(BitflipPoint(q=float(q), csm_accuracy=csm_acc, esn_accuracy=esn_acc))
        return points

    # -- summaries ----------------------------------------------------------

    @staticmethod
    def summarize_bitflip(tables: Sequence[Sequence[BitflipPoint]]) -> List[BitflipSummaryRow]:
        """Per-q mean and population standard deviation across series"""
        if not tables:
            raise DataError("No bit-flip tables to summarize")
        summary = []
        for points in zip(*tables):
            csm = np.array([p.csm_accuracy for p in points if p.csm_accuracy is not None])
            esn = np.array([p.esn_accuracy for p in points if p.esn_accuracy is not None])
            summary.append(
                BitflipSummaryRow(
                    q=points[0].q,
                    csm_mean=float(csm.mean()) if csm.size else float("nan"),
                    csm_sd=float(csm.std()) if csm.size else float("nan"),
                    esn_mean=float(esn.mean()) if esn.size else float("nan"),
                    esn_sd=float(esn.std()) if esn.size else float("nan"),
                )
            )
        return summary

    @staticmethod
    def summarize_by_tweet_rate(
        rows: Sequence[EvaluationRow],
        threshold: float = settings.TWEET_RATE_THRESHOLD,
    ) -> Dict[str, Dict[str, Any]]:
        """Mean and median improvement per model for high- and low-rate series"""
        groups = {
            "high": [r for r in rows if r.tweet_rate > threshold],
            "low": [r for r in rows if r.tweet_rate <= threshold],
        }
        return {
            name: {
                "n": len(group),
                "csm_mean_improvement": _mean([r.csm_improvement for r in group]),
                "csm_median_improvement": _median([r.csm_improvement for r in group]),
                "esn_mean_improvement": _mean([r.esn_improvement for r in group]),
                "esn_median_improvement": _median([r.esn_improvement for r in group]),
            }
            for name, group in groups.items()
        }

    @staticmethod
    def top_outperformers(
        rows: Sequence[EvaluationRow],
        k: int = settings.TOP_K,
    ) -> Dict[str, Dict[str, Any]]:
        """The k series where each model most outperforms the other"""
        scored = [r for r in rows if r.accuracy_difference is not None]
        by_csm = sorted(scored, key=lambda r: (-r.accuracy_difference, r.series_id))[:k]
        by_esn = sorted(scored, key=lambda r: (r.accuracy_difference, r.series_id))[:k]

        def describe(group: List[EvaluationRow], sign: float) -> Dict[str, Any]:
            return {
                "series_ids": [r.series_id for r in group],
                "cutoff": sign * group[-1].accuracy_difference if group else None,
                "mean_complexity": _mean([r.statistical_complexity for r in group]),
            }

        return {"csm": describe(by_csm, 1.0), "esn": describe(by_esn, -1.0)}

    @staticmethod
    def state_count_census(rows: Sequence[EvaluationRow]) -> Dict[int, Dict[str, float]]:
        """Number and share of inferred models per causal state count"""
        counts: Dict[int, int] = {}
        for row in rows:
            if row.n_states is not None:
                counts[row.n_states] = counts.get(row.n_states, 0) + 1
        total = sum(counts.values())
        return {
            n: {"count": c, "share": c / total}
            for n, c in sorted(counts.items())
        }
