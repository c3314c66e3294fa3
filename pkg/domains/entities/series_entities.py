"""
Event and binary series entities
"""
from dataclasses import dataclass, field, replace
from typing import Iterable, List

import numpy as np

from config import settings
from core.exceptions import ConfigurationError, DataError


@dataclass(frozen=True, eq=False)
class EventLog:
    """Event times of one user, integer seconds since epoch"""
    user_id: str
    timestamps: np.ndarray

    def __post_init__(self):
        # Sub-second resolution is truncated
        stamps = np.trunc(np.asarray(self.timestamps, dtype=float)).astype(np.int64)
        if stamps.ndim != 1:
            raise DataError(f"Timestamps for {self.user_id} must be one-dimensional")
        if stamps.size and stamps.min() < 0:
            raise DataError(f"Negative timestamp for user {self.user_id}")
        if np.any(np.diff(stamps) < 0):
            raise DataError(f"Timestamps for user {self.user_id} are not sorted")
        object.__setattr__(self, "timestamps", stamps)

    def __len__(self) -> int:
        return int(self.timestamps.size)


@dataclass(frozen=True)
class DayWindow:
    """Daily observation window [start, end) in seconds of day"""
    start_second_of_day: int
    end_second_of_day: int

    def __post_init__(self):
        if not 0 <= self.start_second_of_day < settings.SECONDS_PER_DAY:
            raise ConfigurationError(f"Window start {self.start_second_of_day} outside [0, 86400)")
        if not self.start_second_of_day < self.end_second_of_day <= settings.SECONDS_PER_DAY:
            raise ConfigurationError(
                f"Window end {self.end_second_of_day} must lie in ({self.start_second_of_day}, 86400]"
            )

    @property
    def length(self) -> int:
        return self.end_second_of_day - self.start_second_of_day

    def bins(self, bin_seconds: int) -> int:
        """Number of bins per day; the window must split evenly"""
        if bin_seconds < 1:
            raise ConfigurationError(f"bin_seconds must be >= 1, got {bin_seconds}")
        if self.length % bin_seconds:
            raise ConfigurationError(
                f"Window length {self.length}s is not divisible by bin width {bin_seconds}s"
            )
        return self.length // bin_seconds

    @classmethod
    def default(cls) -> "DayWindow":
        return cls(settings.DEFAULT_WINDOW_START, settings.DEFAULT_WINDOW_END)


@dataclass(frozen=True, eq=False)
class BinarySeries:
    """Binned binary process laid out as n_days consecutive days"""
    bits: np.ndarray
    bin_seconds: int
    bins_per_day: int
    n_days: int
    series_id: str = field(default="")

    def __post_init__(self):
        bits = np.asarray(self.bits)
        if bits.ndim != 1:
            raise DataError("Series bits must be one-dimensional")
        if bits.size and not np.isin(bits, (0, 1)).all():
            raise DataError(f"Series {self.series_id!r} contains values other than 0 and 1")
        if self.bin_seconds < 1 or self.bins_per_day < 1 or self.n_days < 1:
            raise ConfigurationError("Series geometry must be positive")
        if bits.size != self.bins_per_day * self.n_days:
            raise DataError(
                f"Series {self.series_id!r} has {bits.size} bits, expected "
                f"{self.n_days} x {self.bins_per_day}"
            )
        bits = bits.astype(np.uint8)
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    def __len__(self) -> int:
        return int(self.bits.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinarySeries):
            return NotImplemented
        return (
            self.bin_seconds == other.bin_seconds
            and self.bins_per_day == other.bins_per_day
            and self.n_days == other.n_days
            and np.array_equal(self.bits, other.bits)
        )

    def days(self) -> np.ndarray:
        """Day-by-bin view of the bits"""
        return self.bits.reshape(self.n_days, self.bins_per_day)

    def day_strings(self) -> List[str]:
        return [(day + ord("0")).tobytes().decode("ascii") for day in self.days()]

    def to_bitstring(self) -> str:
        return "".join(self.day_strings())

    def with_bits(self, bits: np.ndarray) -> "BinarySeries":
        return replace(self, bits=np.asarray(bits))

    def select_days(self, day_indices: Iterable[int]) -> "BinarySeries":
        """Series restricted to the given days, in the given order"""
        indices = list(day_indices)
        if not indices:
            raise ConfigurationError("At least one day must be selected")
        return replace(self, bits=self.days()[indices].ravel(), n_days=len(indices))

    @classmethod
    def from_bitstring(
        cls,
        bitstring: str,
        bin_seconds: int,
        bins_per_day: int,
        series_id: str = "",
    ) -> "BinarySeries":
        text = bitstring.strip()
        if not text or set(text) - {"0", "1"}:
            raise DataError(f"Invalid bitstring for series {series_id!r}")
        if len(text) % bins_per_day:
            raise DataError(
                f"Bitstring length {len(text)} is not a multiple of {bins_per_day} bins per day"
            )
        bits = np.frombuffer(text.encode("ascii"), dtype=np.uint8) - ord("0")
        return cls(
            bits=bits,
            bin_seconds=bin_seconds,
            bins_per_day=bins_per_day,
            n_days=len(text) // bins_per_day,
            series_id=series_id,
        )
