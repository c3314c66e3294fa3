# commands/synth.py
"""
Process parameters -> synthetic series file (and optionally the generating machine)
"""
import argparse
import logging

from . import router
from .arguments import add_run_arguments
from domains.enums import ExitCode, ProcessKind
from dtos import SynthRequestDTO
from repositories import ModelRepository, SeriesRepository
from services import SynthService
from utils import derive_seed, log_event, parse_param

logger = logging.getLogger(__name__)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("kind", choices=[k.value for k in ProcessKind], help="Process topology")
    parser.add_argument("--pattern", default=None, help="Bit pattern of a periodic process, e.g. 0011")
    parser.add_argument(
        "--param",
        dest="params",
        type=parse_param,
        action="append",
        default=None,
        help="Topology parameter name=value (repeatable), e.g. p_AA=0.9",
    )
    parser.add_argument("--n-users", type=int, default=None, help="Number of series (default 1)")
    parser.add_argument("--n-days", type=int, default=None, help="Days per series (default 49)")
    parser.add_argument("--bins-per-day", type=int, default=None, help="Bins per day (default 96)")
    parser.add_argument("--dt", type=int, default=None, help="Bin width recorded in the file (default 600)")
    parser.add_argument("--spec-out", default=None, help="Also write the generating machine (JSON)")
    add_run_arguments(parser, "Series file to write")


@router.command("synth", SynthRequestDTO, "Sample series from a known causal state machine", add_arguments)
def synth(request: SynthRequestDTO) -> ExitCode:
    spec = SynthService.make_spec(request.kind, pattern=request.pattern, **request.params)

    series = []
    for i in range(request.n_users):
        series_id = f"{request.kind.value}_{i:04d}"
        series.append(
            SynthService.generate(
                spec,
                request.n_days,
                request.bins_per_day,
                derive_seed(request.seed, series_id),
                series_id=series_id,
                bin_seconds=request.dt,
            )
        )
    SeriesRepository.save(request.out, series)

    oracles = {
        "complexity": SynthService.oracle_complexity(spec),
        "entropy_rate": SynthService.oracle_entropy_rate(spec),
        "optimal_accuracy": SynthService.oracle_optimal_accuracy(spec),
    }
    if request.spec_out:
        ModelRepository.save_causal_state_model(
            request.spec_out,
            SynthService.to_model(spec),
            metadata={"kind": request.kind.value, "params": spec.params, **oracles},
        )

    log_event("synth_completed", {"kind": request.kind.value, "series": len(series), **oracles})
    return ExitCode.OK
