# repositories/series_repository.py
"""
Series file repository: `#key=value` geometry headers then `user_id<TAB>bits`
"""
from pathlib import Path
from typing import Dict, List, Optional, Sequence
import logging

from core.exceptions import ConfigurationError, DataError
from domains.entities import BinarySeries

logger = logging.getLogger(__name__)

HEADER_KEYS = ("bin_seconds", "bins_per_day", "n_days")


class SeriesRepository:
    """Reads and writes binary series files"""

    @staticmethod
    def save(path: str, series: Sequence[BinarySeries]) -> None:
        if not series:
            raise DataError("Refusing to write an empty series file")
        first = series[0]
        for s in series[1:]:
            if (s.bin_seconds, s.bins_per_day, s.n_days) != (
                first.bin_seconds,
                first.bins_per_day,
                first.n_days,
            ):
                raise ConfigurationError(f"Series {s.series_id!r} has a different geometry")

        lines = [f"#{key}={getattr(first, key)}" for key in HEADER_KEYS]
        lines += [f"{s.series_id}\t{s.to_bitstring()}" for s in sorted(series, key=lambda s: s.series_id)]
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
        logger.info(f"✅ Wrote {len(series)} series to {path}")

    @staticmethod
    def load(path: str) -> List[BinarySeries]:
        file = Path(path)
        if not file.exists():
            raise FileNotFoundError(f"Series file not found: {path}")

        header: Dict[str, int] = {}
        series: List[BinarySeries] = []
        for number, raw in enumerate(file.read_text(encoding="utf-8").splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, value = line[1:].partition("=")
                if key.strip() in HEADER_KEYS:
                    try:
                        header[key.strip()] = int(value)
                    except ValueError as e:
                        raise DataError(f"{path}:{number}: invalid header value {value!r}") from e
                continue

            missing = [k for k in HEADER_KEYS if k not in header]
            if missing:
                raise DataError(f"{path}: missing header lines {missing} before data")
            user_id, sep, bits = line.partition("\t")
            if not sep:
                raise DataError(f"{path}:{number}: expected `user_id<TAB>bits`")
            item = BinarySeries.from_bitstring(
                bits, header["bin_seconds"], header["bins_per_day"], series_id=user_id
            )
            if item.n_days != header["n_days"]:
                raise DataError(
                    f"{path}:{number}: series {user_id!r} has {item.n_days} days, header says {header['n_days']}"
                )
            series.append(item)

        if not series:
            raise DataError(f"No series in {path}")
        logger.info(f"✅ Loaded {len(series)} series from {path}")
        return series

    @staticmethod
    def select(series: Sequence[BinarySeries], user: Optional[str] = None) -> BinarySeries:
        """Series of `user`, or the first one when no user is given"""
        if user is None:
            return series[0]
        for s in series:
            if s.series_id == user:
                return s
        raise DataError(f"User {user!r} not found")
