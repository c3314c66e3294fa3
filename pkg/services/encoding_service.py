# services/encoding_service.py
"""
Event binning, coarsening, splitting and corruption
"""
from typing import Iterable, Optional, Tuple
import logging

import numpy as np

from config import settings
from core.exceptions import ArgumentError, ConfigurationError, DataError
from domains.entities import BinarySeries, DayWindow, EventLog

logger = logging.getLogger(__name__)


class EncodingService:
    """Turns event logs into binary series and manipulates them on day boundaries"""

    @staticmethod
    def _window_positions(
        events: EventLog, t0: int, n_days: int, window: DayWindow
    ) -> Tuple[np.ndarray, np.ndarray]:
        """(day index, second within window) of every event falling inside a window"""
        rel = events.timestamps - int(t0)
        day = rel // settings.SECONDS_PER_DAY
        second = rel % settings.SECONDS_PER_DAY
        inside = (
            (rel >= 0)
            & (day < n_days)
            & (second >= window.start_second_of_day)
            & (second < window.end_second_of_day)
        )
        return day[inside], second[inside] - window.start_second_of_day

    @staticmethod
    def binarize(
        events: EventLog,
        t0: int,
        n_days: int,
        window: Optional[DayWindow] = None,
        bin_seconds: int = settings.DEFAULT_BIN_SECONDS,
    ) -> BinarySeries:
        """Bit i is 1 iff some event falls in the i-th half-open bin of the daily windows"""
        window = window or DayWindow.default()
        if n_days < 1:
            raise ConfigurationError(f"n_days must be >= 1, got {n_days}")
        bins_per_day = window.bins(bin_seconds)

        day, offset = EncodingService._window_positions(events, t0, n_days, window)
        bits = np.zeros(n_days * bins_per_day, dtype=np.uint8)
        bits[day * bins_per_day + offset // bin_seconds] = 1

        logger.debug(
            f"Binarized {len(events)} events of {events.user_id}: "
            f"{day.size} inside windows, {int(bits.sum())} active bins"
        )
        return BinarySeries(
            bits=bits,
            bin_seconds=bin_seconds,
            bins_per_day=bins_per_day,
            n_days=n_days,
            series_id=events.user_id,
        )

    @staticmethod
    def coarsen(series: BinarySeries, factor: int) -> BinarySeries:
        """Logical OR over consecutive groups of `factor` bins within each day"""
        if factor < 1 or series.bins_per_day % factor:
            raise ConfigurationError(
                f"Coarsening factor {factor} does not divide {series.bins_per_day} bins per day"
            )
        if factor == 1:
            return series
        grouped = series.days().reshape(series.n_days, series.bins_per_day // factor, factor)
        return BinarySeries(
            bits=grouped.any(axis=2).ravel(),
            bin_seconds=series.bin_seconds * factor,
            bins_per_day=series.bins_per_day // factor,
            n_days=series.n_days,
            series_id=series.series_id,
        )

    @staticmethod
    def split_train_test(series: BinarySeries, train_days: int) -> Tuple[BinarySeries, BinarySeries]:
        """Chronological split on day boundaries"""
        if not 0 < train_days < series.n_days:
            raise ConfigurationError(
                f"train_days must lie in (0, {series.n_days}), got {train_days}"
            )
        train = series.select_days(range(train_days))
        test = series.select_days(range(train_days, series.n_days))
        return train, test

    @staticmethod
    def flip_bits(series: BinarySeries, q: float, seed: int) -> BinarySeries:
        """Complement exactly round(q * length) distinct, uniformly chosen positions"""
        if not 0.0 <= q <= 1.0:
            raise ArgumentError(f"Flip proportion must lie in [0, 1], got {q}")
        n = len(series)
        k = int(np.floor(q * n + 0.5))
        positions = np.random.default_rng(seed).choice(n, size=k, replace=False)
        bits = series.bits.copy()
        bits[positions] ^= 1
        return series.with_bits(bits)

    @staticmethod
    def rastergram(series: BinarySeries) -> np.ndarray:
        """Day-by-bin grid; row d holds day d"""
        return series.days().copy()

    @staticmethod
    def tweet_rate(series: BinarySeries) -> float:
        """Proportion of bins holding at least one event"""
        if len(series) == 0:
            raise ArgumentError("Tweet rate of an empty series is undefined")
        return float(series.bits.mean())

    @staticmethod
    def seconds_tweet_rate(
        events: EventLog,
        t0: int,
        n_days: int,
        window: Optional[DayWindow] = None,
    ) -> float:
        """Proportion of window seconds containing an event (1 s resolution)"""
        window = window or DayWindow.default()
        day, offset = EncodingService._window_positions(events, t0, n_days, window)
        occupied = np.unique(day * window.length + offset).size
        return occupied / float(n_days * window.length)

    @staticmethod
    def default_geometry(logs: Iterable[EventLog]) -> Tuple[int, int]:
        """
        (t0, n_days) covering every event of every log: t0 is the UTC midnight
        at or before the first event and the last day holds the last event.
        """
        stamps = [log.timestamps for log in logs if len(log)]
        if not stamps:
            raise DataError("No events; cannot infer t0 and n_days")
        first = min(int(s[0]) for s in stamps)
        last = max(int(s[-1]) for s in stamps)
        t0 = first - first % settings.SECONDS_PER_DAY
        return t0, (last - t0) // settings.SECONDS_PER_DAY + 1
