# conftest.py
"""
Shared fixtures: series builders and reference processes
"""
import pytest

from domains.entities import BinarySeries
from domains.enums import ProcessKind
from services import SynthService
from utils import reset_metrics


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: statistical checks on large generated samples")


@pytest.fixture(autouse=True)
def clean_metrics():
    reset_metrics()
    yield
    reset_metrics()


@pytest.fixture
def make_periodic():
    """Factory for exact periodic series continued across day boundaries"""

    def build(pattern: str, n_days: int, bins_per_day: int, series_id: str = "periodic") -> BinarySeries:
        total = n_days * bins_per_day
        text = (pattern * (total // len(pattern) + 1))[:total]
        return BinarySeries.from_bitstring(text, 600, bins_per_day, series_id)

    return build


@pytest.fixture
def make_sample():
    """Factory sampling a synthetic process with a fixed seed"""

    def build(kind, n_days: int = 49, bins_per_day: int = 96, seed: int = 0, series_id: str = "", **params):
        spec = SynthService.make_spec(ProcessKind(kind), **params)
        return SynthService.generate(spec, n_days, bins_per_day, seed, series_id=series_id)

    return build


@pytest.fixture
def bursting_spec():
    return SynthService.make_spec(ProcessKind.BURSTING, p_AA=0.9, p_PP=0.8)
