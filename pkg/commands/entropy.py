# commands/entropy.py
"""
Series file -> block entropy table for one user
"""
import argparse
import logging

from . import router
from .arguments import add_estimator_argument, add_run_arguments, add_series_argument, add_user_argument
from domains.enums import ExitCode
from dtos import EntropyRequestDTO
from repositories import ReportRepository, SeriesRepository
from services import InfoTheoryService

logger = logging.getLogger(__name__)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    add_series_argument(parser)
    add_user_argument(parser)
    parser.add_argument(
        "--L-max", type=int, default=None, help="Longest block (default: largest L with 2^L < length)"
    )
    add_estimator_argument(parser)
    add_run_arguments(parser, "CSV to write (L,H_L)")


@router.command("entropy", EntropyRequestDTO, "Block entropies and entropy rate of one series", add_arguments)
def entropy(request: EntropyRequestDTO) -> ExitCode:
    series = SeriesRepository.select(SeriesRepository.load(request.series), request.user)
    L_max = request.L_max
    if L_max is None:
        L_max = max(1, min(InfoTheoryService.max_history_length(len(series)), series.bins_per_day))

    estimate = InfoTheoryService.entropy_rate(series, L_max, request.estimator)
    ReportRepository.write_entropy_table(request.out, InfoTheoryService.block_entropy_table(series, L_max))
    logger.info(
        f"✅ {series.series_id}: h={estimate.h:.4f} bits/symbol at L={estimate.L_used}"
        f"{' (plateau)' if estimate.plateau else ''}"
    )
    return ExitCode.OK
