# commands/infer.py
"""
Series file -> fitted causal state model (and echo state network) for one user
"""
import argparse
import logging

from . import router
from .arguments import add_model_arguments, add_run_arguments, add_user_argument
from core.exceptions import DataError
from domains.enums import ExitCode
from dtos import InferRequestDTO
from repositories import ModelRepository, SeriesRepository
from services import CssrService, EsnService, EvaluationService
from utils import derive_seed, log_event

logger = logging.getLogger(__name__)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    add_model_arguments(parser)
    add_user_argument(parser)
    parser.add_argument(
        "--train-days", type=int, default=None, help="Fit on the leading days only (default: all)"
    )
    parser.add_argument("--esn-out", default=None, help="Also train and save an echo state network")
    add_run_arguments(parser, "Causal state model JSON to write")


@router.command("infer", InferRequestDTO, "Fit and save the models of one series", add_arguments)
def infer(request: InferRequestDTO) -> ExitCode:
    series = SeriesRepository.select(SeriesRepository.load(request.series), request.user)
    if request.train_days is not None:
        if request.train_days > series.n_days:
            raise DataError(f"{series.series_id} has only {series.n_days} days")
        series = series.select_days(range(request.train_days))

    config = request.cssr_config()
    cv_accuracy = None
    if config.history_length is None:
        folds = EvaluationService.fold_count(series.n_days, request.folds)
        result = EvaluationService.cross_validate_history(series, folds, config)
        config = config.with_length(result.selected_L)
        cv_accuracy = result.mean_accuracy[result.selected_L]

    model = CssrService.infer(series, config)
    complexity = CssrService.statistical_complexity(model)
    ModelRepository.save_causal_state_model(
        request.out,
        model,
        metadata={
            "series_id": series.series_id,
            "alpha": config.alpha,
            "test": config.test.value,
            "statistical_complexity": complexity,
            "cv_accuracy": cv_accuracy,
        },
    )

    if request.esn_out:
        network = EsnService.build(request.esn_config().with_seed(derive_seed(request.seed, series.series_id)))
        network = EsnService.train(network, series)
        ModelRepository.save_echo_state_model(request.esn_out, network)
        logger.info(f"Network training MSE {EsnService.training_mse(network, series):.4f}")

    log_event(
        "infer_completed",
        {
            "series_id": series.series_id,
            "L": model.history_length,
            "n_states": model.n_states,
            "statistical_complexity": complexity,
        },
    )
    return ExitCode.OK
