# commands/arguments.py
"""
Flag groups shared by several commands
"""
import argparse

from config import settings
from domains.enums import EntropyEstimator, EsnFeedback, HomogeneityTest
from utils.parsing import parse_time_of_day


def add_run_arguments(parser: argparse.ArgumentParser, out_help: str) -> None:
    parser.add_argument("--out", required=True, help=out_help)
    parser.add_argument("--seed", type=int, default=None, help="Master seed for every random draw")
    parser.add_argument(
        "--jobs", type=int, default=None, help="Worker pool size (default from profile)"
    )


def add_series_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("series", help="Series file (`#bin_seconds=` headers, `user_id<TAB>bits`)")


def add_user_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--user", default=None, help="Series id to use (default: first in file)")


def add_window_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--dt", type=int, default=None, help=f"Bin width in seconds (default {settings.DEFAULT_BIN_SECONDS})"
    )
    parser.add_argument(
        "--window-start",
        type=parse_time_of_day,
        default=None,
        help="Daily window start: HH:MM, 7h, 420m or seconds (default 07:00)",
    )
    parser.add_argument(
        "--window-end",
        type=parse_time_of_day,
        default=None,
        help="Daily window end, exclusive (default 23:00)",
    )


def add_model_arguments(parser: argparse.ArgumentParser) -> None:
    add_series_argument(parser)
    parser.add_argument("--alpha", type=float, default=None, help="CSSR significance level")
    parser.add_argument(
        "--test",
        choices=[t.value for t in HomogeneityTest],
        default=None,
        help="CSSR homogeneity test",
    )
    parser.add_argument(
        "--L", type=int, default=None, help="History length (default: cross-validated)"
    )
    parser.add_argument("--folds", type=int, default=None, help="Cross-validation folds")
    parser.add_argument("--reservoir-size", type=int, default=None, help="Reservoir nodes")
    parser.add_argument(
        "--spectral-radius", type=float, default=None, help="Reservoir spectral radius"
    )
    parser.add_argument("--weight-low", type=float, default=None, help="Weight interval lower bound")
    parser.add_argument("--weight-high", type=float, default=None, help="Weight interval upper bound")
    parser.add_argument(
        "--feedback",
        choices=[f.value for f in EsnFeedback],
        default=None,
        help="Network feedback at prediction time (default observed)",
    )


def add_estimator_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--estimator",
        choices=[e.value for e in EntropyEstimator],
        default=None,
        help="Entropy-rate estimator",
    )
