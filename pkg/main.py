# main.py
"""
Point process predictor command line

Usage:
  python main.py [--profile PROFILE] [--log-level LEVEL] COMMAND [options]

Commands:
  encode     events file -> series file (plus optional tweet-rate CSV)
  evaluate   series file -> per-series report CSV + <out>.summary.json
  bitflip    series file -> accuracy under bit-flip corruption
  cv         series file -> held-out accuracy per history length
  synth      process parameters -> synthetic series file
  raster     series file -> rastergram of one series
  infer      series file -> fitted model JSON for one series
  entropy    series file -> block entropy table of one series

Exit codes: 0 success, 1 usage/configuration error, 2 data error,
3 numerical failure.
"""
import logging
import sys
from typing import List, Optional

from config import Profile, get_settings
from commands import CliArgumentParser, router
from domains.enums import ExitCode
from utils import metrics_summary, reset_metrics

logger = logging.getLogger(__name__)


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog="point-process-predictor",
        description="Causal state models and echo state networks for binary event series",
    )
    parser.add_argument(
        "--profile",
        choices=[p.value for p in Profile],
        default=Profile.LOCAL.value,
        help="Settings profile (log level and default worker count)",
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="Override the profile's log level",
    )
    router.install(parser)
    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(level=level)
    logging.getLogger().setLevel(level)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except Exception as e:
        logger.error(f"{e}")
        parser.print_usage(sys.stderr)
        return int(ExitCode.from_exception(e))

    profile = get_settings(args.profile)
    configure_logging(args.log_level or profile.LOG_LEVEL)
    if getattr(args, "jobs", None) is None:
        args.jobs = profile.MAX_WORKERS

    reset_metrics()
    try:
        code = router.dispatch(args)
    except Exception as e:
        code = ExitCode.from_exception(e)
        logger.error(f"{args.command} failed ({code.name.lower()}): {e}")
    finally:
        logger.info(f"Run metrics: {metrics_summary()}")

    return int(code)


if __name__ == "__main__":
    sys.exit(main())
