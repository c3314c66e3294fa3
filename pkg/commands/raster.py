# commands/raster.py
"""
Series file -> rastergram (text grid, optional PGM image)
"""
import argparse

from . import router
from .arguments import add_run_arguments, add_series_argument, add_user_argument
from domains.enums import ExitCode
from dtos import RasterRequestDTO
from repositories import RasterRepository, SeriesRepository
from services import EncodingService


def add_arguments(parser: argparse.ArgumentParser) -> None:
    add_series_argument(parser)
    add_user_argument(parser)
    parser.add_argument("--image", default=None, help="Also write a PGM image")
    add_run_arguments(parser, "Text rastergram to write (one row per day)")


@router.command("raster", RasterRequestDTO, "Day-by-bin grid of one series", add_arguments)
def raster(request: RasterRequestDTO) -> ExitCode:
    series = SeriesRepository.select(SeriesRepository.load(request.series), request.user)
    grid = EncodingService.rastergram(series)
    RasterRepository.write_text(request.out, grid)
    if request.image:
        RasterRepository.write_pgm(request.image, grid)
    return ExitCode.OK
