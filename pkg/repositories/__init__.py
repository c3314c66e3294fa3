# repositories/__init__.py
from .event_repository import EventRepository
from .series_repository import SeriesRepository
from .model_repository import ModelRepository
from .report_repository import ReportRepository
from .raster_repository import RasterRepository

__all__ = [
    "EventRepository",
    "SeriesRepository",
    "ModelRepository",
    "ReportRepository",
    "RasterRepository",
]
