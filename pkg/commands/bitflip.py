# commands/bitflip.py
"""
Series file -> accuracy under bit-flip corruption
"""
import argparse
import logging

from . import router
from .arguments import add_model_arguments, add_run_arguments
from core.exceptions import DataError
from domains.enums import ExitCode
from dtos import BitflipRequestDTO
from repositories import ReportRepository, SeriesRepository
from services import EvaluationService
from utils import default_q_grid, log_event, parse_q_grid
from workers import EvaluationWorker

logger = logging.getLogger(__name__)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    add_model_arguments(parser)
    parser.add_argument(
        "--q-grid",
        type=parse_q_grid,
        default=default_q_grid(),
        help="Flip proportions: `0,0.1,0.5` or `start:stop:step` (default 0:1:0.1)",
    )
    parser.add_argument("--tables-out", default=None, help="Also write per-series tables (CSV)")
    add_run_arguments(parser, "Summary CSV to write (q,csm_mean,csm_sd,esn_mean,esn_sd)")


@router.command("bitflip", BitflipRequestDTO, "Accuracy of both models on bit-flipped copies", add_arguments)
def bitflip(request: BitflipRequestDTO) -> ExitCode:
    series = SeriesRepository.load(request.series)
    service = EvaluationService(request.cssr_config(), request.esn_config(), request.folds)
    worker = EvaluationWorker(
        job=lambda s: service.bitflip_experiment(s, request.q_grid, request.seed),
        name=lambda s: s.series_id,
        max_workers=request.jobs,
    )
    tables = worker.run(series)
    if not tables:
        raise DataError("Every series failed the bit-flip experiment")

    summary = service.summarize_bitflip([points for _, points in tables])
    ReportRepository.write_bitflip(request.out, summary)
    if request.tables_out:
        ReportRepository.write_bitflip_tables(request.tables_out, tables)

    log_event("bitflip_completed", {"series": len(tables), "q_values": len(request.q_grid)})
    return ExitCode.OK
