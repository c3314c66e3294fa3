# services/esn_service.py
"""
Echo state network construction, training and one-step-ahead prediction
"""
from dataclasses import replace
from typing import Optional, Tuple
import logging

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy.special import expit, logit
from tenacity import Retrying, retry_if_exception_type, stop_after_attempt

from config import settings
from core.exceptions import ArgumentError, DataError, ModelStateError, NumericalError
from core.linalg import pseudo_inverse, spectral_radius
from domains.entities import BinarySeries, EchoStateModel
from domains.enums import EsnFeedback
from dtos.config_dto import EsnConfig
from utils.monitoring import measure_time, track_metric

logger = logging.getLogger(__name__)


def day_inputs(day: np.ndarray, n_inputs: int) -> np.ndarray:
    """Row t holds the n_inputs bits before t, oldest first, zero-padded at the day start"""
    padded = np.concatenate([np.zeros(n_inputs), np.asarray(day, dtype=float)])
    return sliding_window_view(padded, n_inputs)[: len(day)]


class EsnService:
    """Reservoir networks with pseudo-inverse readouts"""

    @staticmethod
    def _sample(config: EsnConfig, attempt: int) -> EchoStateModel:
        rng = np.random.default_rng(np.random.SeedSequence(config.seed, spawn_key=(attempt,)))
        lo, hi = config.weight_interval
        n = config.n_reservoir

        W_raw = rng.uniform(lo, hi, size=(n, n))
        W_in = rng.uniform(lo, hi, size=(n, config.n_inputs))
        W_fb = rng.uniform(lo, hi, size=n)

        rho = spectral_radius(W_raw)
        if rho <= np.finfo(float).tiny:
            raise NumericalError(
                "Degenerate reservoir sample",
                diagnostics={"seed": config.seed, "attempt": attempt, "spectral_radius": rho},
            )
        return EchoStateModel(
            config=config,
            W=W_raw * (config.spectral_radius_target / rho),
            W_in=W_in,
            W_fb=W_fb,
        )

    @staticmethod
    def build(config: EsnConfig) -> EchoStateModel:
        """Sample weights from the seeded stream; degenerate samples move to the next substream"""
        retrying = Retrying(
            stop=stop_after_attempt(settings.ESN_BUILD_ATTEMPTS),
            retry=retry_if_exception_type(NumericalError),
            reraise=True,
        )
        for attempt in retrying:
            with attempt:
                number = attempt.retry_state.attempt_number - 1
                if number:
                    logger.warning(f"Rebuilding reservoir for seed {config.seed}, attempt {number + 1}")
                return EsnService._sample(config, number)

    @staticmethod
    def spectral_radius(matrix) -> float:
        return spectral_radius(matrix)

    @staticmethod
    def step(model: EchoStateModel, x, z_prev: Optional[float] = None) -> np.ndarray:
        """y <- sigma(W_in x + W y + W_fb z_prev); updates and returns the model state"""
        x = np.asarray(x, dtype=float).ravel()
        if x.size != model.n_inputs:
            raise ArgumentError(f"Expected {model.n_inputs} inputs, got {x.size}")
        feedback = model.z_prev if z_prev is None else float(z_prev)
        model.y = expit(model.W_in @ x + model.W @ model.y + model.W_fb * feedback)
        return model.y

    @staticmethod
    def _require_length(model: EchoStateModel, series: BinarySeries) -> None:
        washout = model.config.washout
        if len(series) < washout + model.n_inputs + 1 or series.bins_per_day <= washout:
            raise DataError(
                f"Series {series.series_id!r} ({series.n_days} x {series.bins_per_day}) is too "
                f"short for {model.n_inputs} inputs and a washout of {washout} steps per day"
            )

    @staticmethod
    def design_matrix(model: EchoStateModel, series: BinarySeries) -> Tuple[np.ndarray, np.ndarray]:
        """
        Teacher-forced regression problem: rows [x_t | y_t] and logit targets,
        skipping the first `washout` steps of every day.
        """
        EsnService._require_length(model, series)
        delta = model.config.target_clip
        washout = model.config.washout
        rows, targets = [], []

        for day in series.days():
            clipped = np.clip(day.astype(float), delta, 1.0 - delta)
            inputs = day_inputs(day, model.n_inputs)
            y = np.zeros(model.n_reservoir)
            z_prev = 0.0
            for t, x in enumerate(inputs):
                y = expit(model.W_in @ x + model.W @ y + model.W_fb * z_prev)
                if t >= washout:
                    rows.append(np.concatenate([x, y]))
                    targets.append(clipped[t])
                z_prev = clipped[t]

        return np.vstack(rows), logit(np.asarray(targets))

    @staticmethod
    @measure_time("esn_train")
    def train(model: EchoStateModel, series: BinarySeries) -> EchoStateModel:
        """Least-squares readout W_out = (S^+ D)^T on the teacher-forced states"""
        S, D = EsnService.design_matrix(model, series)
        W_out = pseudo_inverse(S) @ D
        if not np.isfinite(W_out).all():
            raise NumericalError(
                "Readout contains non-finite weights",
                diagnostics={"rows": S.shape[0], "columns": S.shape[1]},
            )
        track_metric("esn_training_rows", S.shape[0])
        trained = replace(model, W_out=W_out, y=None, z_prev=0.0)
        logger.debug(
            f"Trained readout on {S.shape[0]} rows for {series.series_id!r}, "
            f"mse={EsnService.readout_mse(S, D, W_out):.6f}"
        )
        return trained

    @staticmethod
    def readout_mse(S: np.ndarray, D: np.ndarray, W_out: np.ndarray) -> float:
        residual = D - S @ W_out
        return float(np.mean(residual**2))

    @staticmethod
    def training_mse(model: EchoStateModel, series: BinarySeries) -> float:
        """Logit-target MSE of the trained readout on the teacher-forced states of `series`"""
        if not model.is_trained:
            raise ModelStateError("Model has not been trained")
        S, D = EsnService.design_matrix(model, series)
        return EsnService.readout_mse(S, D, model.W_out)

    @staticmethod
    def predict_sequence(model: EchoStateModel, series: BinarySeries) -> Tuple[np.ndarray, np.ndarray]:
        """
        One-step-ahead predictions z_t = sigma(W_out [x_t | y_t]); the reservoir restarts every day.

        The feedback into step t+1 is the clipped observed bit X_t (the training
        dynamics) or, with EsnFeedback.PREDICTED, the clipped rounding of z_t.
        """
        if not model.is_trained:
            raise ModelStateError("Model has not been trained")
        delta = model.config.target_clip
        free_running = model.config.feedback == EsnFeedback.PREDICTED
        probs = np.empty(len(series))
        i = 0
        for day in series.days():
            clipped = np.clip(day.astype(float), delta, 1.0 - delta)
            y = np.zeros(model.n_reservoir)
            z_prev = 0.0
            for t, x in enumerate(day_inputs(day, model.n_inputs)):
                y = expit(model.W_in @ x + model.W @ y + model.W_fb * z_prev)
                z = float(expit(model.W_out @ np.concatenate([x, y])))
                probs[i] = z
                i += 1
                if free_running:
                    z_prev = 1.0 - delta if z > 0.5 else delta
                else:
                    z_prev = clipped[t]

        return (probs > 0.5).astype(np.uint8), probs
