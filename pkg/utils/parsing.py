# utils/parsing.py
"""
Flag value parsing helpers
"""
from typing import List, Tuple

import numpy as np

from config import settings
from core.exceptions import ArgumentError


def parse_time_of_day(value: str) -> int:
    """Seconds of day from "HH:MM", "7h", "420m", "25200s" or plain seconds"""
    text = str(value).strip().lower()
    try:
        if ":" in text:
            hours, minutes = text.split(":", 1)
            seconds = int(hours) * 3600 + int(minutes) * 60
        elif text.endswith("h"):
            seconds = int(text[:-1]) * 3600
        elif text.endswith("m"):
            seconds = int(text[:-1]) * 60
        elif text.endswith("s"):
            seconds = int(text[:-1])
        else:
            seconds = int(text)
    except ValueError as e:
        raise ArgumentError(f"Cannot parse time of day {value!r}") from e

    if not 0 <= seconds <= settings.SECONDS_PER_DAY:
        raise ArgumentError(f"Time of day {value!r} is outside [00:00, 24:00]")
    return seconds


def parse_q_grid(value: str) -> List[float]:
    """Comma-separated proportions, or start:stop:step (inclusive stop)"""
    text = str(value).strip()
    try:
        if text.count(":") == 2:
            start, stop, step = (float(v) for v in text.split(":"))
            if step <= 0:
                raise ArgumentError(f"Grid step must be positive, got {step}")
            count = int(np.floor((stop - start) / step + 1e-9)) + 1
            grid = [round(start + k * step, 10) for k in range(count)]
        else:
            grid = [float(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise ArgumentError(f"Cannot parse q grid {value!r}") from e

    if not grid:
        raise ArgumentError("q grid is empty")
    bad = [q for q in grid if not 0.0 <= q <= 1.0]
    if bad:
        raise ArgumentError(f"q values outside [0, 1]: {bad}")
    return grid


def default_q_grid() -> List[float]:
    """0.0 .. 1.0 in steps of the configured bit-flip step"""
    return parse_q_grid(f"0:1:{settings.BITFLIP_STEP}")


def parse_param(value: str) -> Tuple[str, float]:
    """`name=value` pair for process parameters, e.g. `p_AA=0.9`"""
    name, sep, number = str(value).partition("=")
    if not sep or not name.strip():
        raise ArgumentError(f"Expected name=value, got {value!r}")
    try:
        return name.strip(), float(number)
    except ValueError as e:
        raise ArgumentError(f"Parameter {name.strip()!r} needs a number, got {number!r}") from e
