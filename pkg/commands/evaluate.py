# commands/evaluate.py
"""
Series file -> evaluation report CSV and summary JSON
"""
import argparse
import logging

from . import router
from .arguments import add_estimator_argument, add_model_arguments, add_run_arguments
from core.exceptions import DataError
from domains.entities import EvaluationReport
from domains.enums import ExitCode
from dtos import EvaluateRequestDTO, EvaluationSummaryDTO
from repositories import ReportRepository, SeriesRepository
from services import EvaluationService
from utils import log_event
from workers import EvaluationWorker

logger = logging.getLogger(__name__)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    add_model_arguments(parser)
    parser.add_argument("--train-days", type=int, default=None, help="Days used for training (default 45)")
    add_estimator_argument(parser)
    add_run_arguments(parser, "Report CSV to write (summary goes to <out>.summary.json)")


@router.command("evaluate", EvaluateRequestDTO, "Compare baseline, CSSR and ESN per series", add_arguments)
def evaluate(request: EvaluateRequestDTO) -> ExitCode:
    series = SeriesRepository.load(request.series)
    too_short = [s.series_id for s in series if s.n_days <= request.train_days]
    if too_short:
        raise DataError(
            f"Series need more than {request.train_days} days; too short: {', '.join(too_short[:5])}"
        )

    service = EvaluationService(
        request.cssr_config(), request.esn_config(), request.folds, request.estimator
    )
    worker = EvaluationWorker(
        job=lambda s: service.evaluate_series(s, request.train_days, request.seed),
        name=lambda s: s.series_id,
        max_workers=request.jobs,
    )
    rows = [row for _, row in worker.run(series)]
    if not rows:
        raise DataError("Every series failed to evaluate")

    if len(rows) >= 4:
        report = service.quartile_by_entropy_divergence(rows)
    else:
        logger.warning(f"Only {len(rows)} series; skipping entropy-divergence quartiles")
        report = EvaluationReport(rows=rows)

    for row in rows:
        if row.error:
            logger.error(f"{row.series_id}: {row.error}")

    ReportRepository.write_evaluation(request.out, report.rows)
    summary = EvaluationSummaryDTO(
        n_series=len(rows),
        n_failed=len(worker.failures) + sum(1 for r in rows if r.error),
        quartile_means=report.quartile_means,
        tweet_rate_groups=service.summarize_by_tweet_rate(rows),
        top_outperformers=service.top_outperformers(rows),
        state_census=service.state_count_census(rows),
    )
    ReportRepository.write_summary(f"{request.out}.summary.json", summary)

    log_event("evaluate_completed", {"series": len(rows), "quartile_means": report.quartile_means})
    return ExitCode.OK
