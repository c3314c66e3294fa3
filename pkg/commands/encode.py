# commands/encode.py
"""
Events file -> series file
"""
import argparse
import logging

from . import router
from .arguments import add_run_arguments, add_window_arguments
from config import settings
from core.exceptions import ConfigurationError, DataError
from domains.enums import EventFormat, ExitCode
from dtos import EncodeRequestDTO
from repositories import EventRepository, ReportRepository, SeriesRepository
from services import EncodingService
from utils import log_event

logger = logging.getLogger(__name__)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("events", help="Events file: CSV `user_id,epoch_second` or JSON lines")
    add_window_arguments(parser)
    parser.add_argument(
        "--t0", type=int, default=None, help="Epoch second of day 0 (default: UTC midnight before the first event)"
    )
    parser.add_argument(
        "--n-days", type=int, default=None, help="Days to encode (default: through the last event)"
    )
    parser.add_argument("--coarsen", type=int, default=None, help="OR-merge this many bins into one")
    parser.add_argument(
        "--format",
        dest="event_format",
        choices=[f.value for f in EventFormat],
        default=None,
        help="Override format detection from the file extension",
    )
    parser.add_argument("--rates-out", default=None, help="Also write per-user tweet rates (CSV)")
    add_run_arguments(parser, "Series file to write")


@router.command("encode", EncodeRequestDTO, "Bin raw event timestamps into binary series", add_arguments)
def encode(request: EncodeRequestDTO) -> ExitCode:
    logs = EventRepository.load(request.events, request.event_format)

    t0, n_days = request.t0, request.n_days
    if t0 is None:
        t0, _ = EncodingService.default_geometry(logs)
    if n_days is None:
        ends = [int(log.timestamps[-1]) for log in logs if len(log)]
        if not ends:
            raise DataError("No events; cannot infer n_days")
        last = max(ends)
        if last < t0:
            raise ConfigurationError(f"t0={t0} lies after the last event ({last})")
        n_days = (last - t0) // settings.SECONDS_PER_DAY + 1
    window = request.window()

    series, rates = [], []
    for log in logs:
        binned = EncodingService.binarize(log, t0, n_days, window, request.dt)
        if request.coarsen > 1:
            binned = EncodingService.coarsen(binned, request.coarsen)
        series.append(binned)

        rate = EncodingService.tweet_rate(binned)
        fine_rate = EncodingService.seconds_tweet_rate(log, t0, n_days, window)
        rates.append((log.user_id, rate, fine_rate))
        logger.info(f"{log.user_id}: tweet rate {rate:.4f} ({fine_rate:.6f} at 1 s resolution)")

    SeriesRepository.save(request.out, series)
    if request.rates_out:
        ReportRepository.write_rates(request.rates_out, rates)

    log_event(
        "encode_completed",
        {"users": len(series), "t0": t0, "n_days": n_days, "bins_per_day": series[0].bins_per_day},
    )
    return ExitCode.OK
