# commands/cv.py
"""
Series file -> held-out accuracy per history length
"""
import argparse

from . import router
from .arguments import add_model_arguments, add_run_arguments
from core.exceptions import DataError
from domains.enums import ExitCode
from dtos import CvRequestDTO
from repositories import ReportRepository, SeriesRepository
from services import EvaluationService
from workers import EvaluationWorker


def add_arguments(parser: argparse.ArgumentParser) -> None:
    add_model_arguments(parser)
    parser.add_argument("--train-days", type=int, default=None, help="Leading days to cross-validate on (default 45)")
    add_run_arguments(parser, "CSV to write (series_id,L,mean_accuracy,selected)")


@router.command("cv", CvRequestDTO, "Cross-validate the CSSR history length", add_arguments)
def cv(request: CvRequestDTO) -> ExitCode:
    series = SeriesRepository.load(request.series)
    too_short = [s.series_id for s in series if s.n_days < request.train_days]
    if too_short:
        raise DataError(f"Series shorter than {request.train_days} days: {', '.join(too_short[:5])}")

    config = request.cssr_config()
    worker = EvaluationWorker(
        job=lambda s: EvaluationService.cross_validate_history(
            s.select_days(range(request.train_days)), request.folds, config
        ),
        name=lambda s: s.series_id,
        max_workers=request.jobs,
    )
    results = worker.run(series)
    if not results:
        raise DataError("Cross-validation failed for every series")

    ReportRepository.write_cv(request.out, results)
    return ExitCode.OK
