# utils/monitoring.py
"""
Monitoring and metrics utilities
"""
import asyncio
import logging
import threading
import time
from collections import defaultdict
from functools import wraps
from typing import Any, Dict, Optional

from config import settings

logger = logging.getLogger(__name__)

# In-process aggregates: name -> [count, total, max]
_metrics: Dict[str, list] = defaultdict(lambda: [0, 0.0, float("-inf")])
_lock = threading.Lock()


def track_metric(name: str, value: float, labels: Optional[Dict[str, str]] = None):
    """Track a custom metric"""
    logger.debug(f"Metric: {name}={value} labels={labels}")
    with _lock:
        entry = _metrics[name]
        entry[0] += 1
        entry[1] += float(value)
        entry[2] = max(entry[2], float(value))


def log_event(event_name: str, data: Dict[str, Any]):
    """Log a structured event"""
    logger.info(f"Event: {event_name} service={settings.SERVICE_NAME} data={data}")


def metrics_summary() -> Dict[str, Dict[str, float]]:
    """Count, mean and max of every metric tracked so far"""
    with _lock:
        return {
            name: {"count": count, "mean": total / count, "max": peak}
            for name, (count, total, peak) in sorted(_metrics.items())
            if count
        }


def reset_metrics():
    with _lock:
        _metrics.clear()


def measure_time(metric_name: str):
    """Decorator to measure function execution time"""
    def decorator(func):
        @wraps(func)
        async def async_wrapper(*args, **kwargs):
            start = time.perf_counter()
            try:
                result = await func(*args, **kwargs)
                track_metric(f"{metric_name}_duration_ms", (time.perf_counter() - start) * 1000)
                return result
            except Exception:
                track_metric(f"{metric_name}_errors", 1)
                raise

        @wraps(func)
        def sync_wrapper(*args, **kwargs):
            start = time.perf_counter()
            try:
                result = func(*args, **kwargs)
                track_metric(f"{metric_name}_duration_ms", (time.perf_counter() - start) * 1000)
                return result
            except Exception:
                track_metric(f"{metric_name}_errors", 1)
                raise

        if asyncio.iscoroutinefunction(func):
            return async_wrapper
        else:
            return sync_wrapper

    return decorator
