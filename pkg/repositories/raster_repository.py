# repositories/raster_repository.py
"""
Rastergram writers: text grid and plain PGM image
"""
from pathlib import Path
import logging

import numpy as np

logger = logging.getLogger(__name__)


class RasterRepository:

    @staticmethod
    def to_text(grid: np.ndarray) -> str:
        return "".join((row + ord("0")).astype(np.uint8).tobytes().decode("ascii") + "\n" for row in grid)

    @staticmethod
    def write_text(path: str, grid: np.ndarray) -> None:
        Path(path).write_text(RasterRepository.to_text(grid), encoding="ascii")
        logger.info(f"✅ Wrote {grid.shape[0]}x{grid.shape[1]} rastergram to {path}")

    @staticmethod
    def write_pgm(path: str, grid: np.ndarray) -> None:
        """P2 graymap, events black on white"""
        rows, cols = grid.shape
        pixels = 1 - np.asarray(grid, dtype=np.uint8)
        body = "\n".join(" ".join(str(v) for v in row) for row in pixels)
        Path(path).write_text(f"P2\n{cols} {rows}\n1\n{body}\n", encoding="ascii")
        logger.info(f"✅ Wrote rastergram image to {path}")
