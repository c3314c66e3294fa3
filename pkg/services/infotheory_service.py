# services/infotheory_service.py
"""
Shannon entropy, block entropies and entropy-rate estimation
"""
from typing import List, Tuple
import logging

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from config import settings
from core.exceptions import ArgumentError, ConfigurationError, DataError
from domains.entities import BinarySeries, EntropyEstimate
from domains.enums import EntropyEstimator

logger = logging.getLogger(__name__)


def window_codes(series: BinarySeries, length: int) -> np.ndarray:
    """
    Integer code of every length-`length` window lying inside a single day.
    The oldest bit of a window is its most significant bit.
    """
    if length < 1:
        raise ArgumentError(f"Window length must be >= 1, got {length}")
    if length > series.bins_per_day:
        raise ConfigurationError(
            f"Window length {length} exceeds the {series.bins_per_day} bins of a day"
        )
    windows = sliding_window_view(series.days(), length, axis=1)
    weights = np.left_shift(1, np.arange(length - 1, -1, -1, dtype=np.int64))
    return (windows.astype(np.int64) @ weights).ravel()


class InfoTheoryService:
    """Plug-in entropy estimators in bits"""

    @staticmethod
    def shannon_entropy(dist) -> float:
        """-sum p log2 p with 0 log 0 = 0"""
        p = np.asarray(dist, dtype=float).ravel()
        if p.size == 0 or np.any(p < 0) or not np.isfinite(p).all():
            raise ArgumentError(f"Invalid probability distribution: {dist}")
        if abs(p.sum() - 1.0) > 1e-9:
            raise ArgumentError(f"Distribution sums to {p.sum()}, expected 1")
        nz = p[p > 0]
        return float(max(0.0, -np.sum(nz * np.log2(nz))))

    @staticmethod
    def block_entropy(series: BinarySeries, L: int) -> float:
        """Entropy of the empirical length-L window distribution divided by L"""
        if len(series) < L:
            raise DataError(f"Series of length {len(series)} is shorter than block length {L}")
        _, counts = np.unique(window_codes(series, L), return_counts=True)
        return InfoTheoryService.shannon_entropy(counts / counts.sum()) / L

    @staticmethod
    def block_entropy_table(series: BinarySeries, L_max: int) -> List[Tuple[int, float]]:
        return [(L, InfoTheoryService.block_entropy(series, L)) for L in range(1, L_max + 1)]

    @staticmethod
    def entropy_rate(
        series: BinarySeries,
        L_max: int,
        estimator: EntropyEstimator = EntropyEstimator.PER_SYMBOL,
        plateau_tolerance: float = settings.PLATEAU_TOLERANCE,
    ) -> EntropyEstimate:
        """
        Block entropies for L = 1..L_max and the entropy rate read off at L_max.

        PER_SYMBOL reports H_{L_max}; CONDITIONAL reports
        h_{L_max} = L H_L - (L - 1) H_{L-1}, the entropy of the next symbol
        given L_max - 1 past symbols. The plateau flag is set when the chosen
        sequence moved by less than `plateau_tolerance` at its last step.
        """
        if L_max < 1:
            raise ArgumentError(f"L_max must be >= 1, got {L_max}")
        if len(series) < 2**L_max:
            logger.warning(
                f"Series {series.series_id!r} has {len(series)} symbols for "
                f"{2**L_max} possible blocks; entropy estimate is biased low"
            )

        block = np.array(
            [InfoTheoryService.block_entropy(series, L) for L in range(1, L_max + 1)]
        )
        lengths = np.arange(1, L_max + 1)
        joint = lengths * block
        conditional = np.diff(joint, prepend=0.0).clip(min=0.0)

        chosen = conditional if EntropyEstimator(estimator) is EntropyEstimator.CONDITIONAL else block
        plateau = L_max > 1 and abs(chosen[-1] - chosen[-2]) < plateau_tolerance
        h = float(np.clip(chosen[-1], 0.0, 1.0))

        return EntropyEstimate(
            block_entropies=block,
            conditional_entropies=conditional,
            h=h,
            L_used=L_max,
            plateau=bool(plateau),
        )

    @staticmethod
    def max_history_length(n: int) -> int:
        """Largest integer strictly below log2(n)"""
        if n < 2:
            raise ArgumentError(f"Need at least 2 observations, got {n}")
        return (int(n) - 1).bit_length() - 1
