# utils/__init__.py
from .monitoring import track_metric, log_event, measure_time, metrics_summary, reset_metrics
from .seeding import derive_seed, stable_key
from .parsing import parse_time_of_day, parse_q_grid, default_q_grid, parse_param

__all__ = [
    "track_metric",
    "log_event",
    "measure_time",
    "metrics_summary",
    "reset_metrics",
    "derive_seed",
    "stable_key",
    "parse_time_of_day",
    "parse_q_grid",
    "default_q_grid",
    "parse_param",
]
