# test_infotheory.py
import logging

import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from core.exceptions import ArgumentError, ConfigurationError
from domains.entities import BinarySeries
from domains.enums import EntropyEstimator
from services import InfoTheoryService, SynthService
from services.infotheory_service import window_codes


def test_shannon_entropy_known_values():
    assert InfoTheoryService.shannon_entropy([0.5, 0.5]) == 1.0
    assert InfoTheoryService.shannon_entropy([1.0]) == 0.0
    assert InfoTheoryService.shannon_entropy([2 / 3, 1 / 3]) == pytest.approx(0.9183, abs=1e-4)
    assert InfoTheoryService.shannon_entropy([0.0, 1.0, 0.0]) == 0.0


@pytest.mark.parametrize("dist", [[0.5, 0.6], [-0.1, 1.1], [], [np.nan, 1.0]])
def test_shannon_entropy_rejects_non_distributions(dist):
    with pytest.raises(ArgumentError):
        InfoTheoryService.shannon_entropy(dist)


def test_window_codes_put_the_oldest_bit_first():
    series = BinarySeries.from_bitstring("1100", 600, 4)
    assert window_codes(series, 2).tolist() == [3, 2, 0]


def test_windows_stay_inside_days():
    series = BinarySeries.from_bitstring("001100", 600, 3)
    assert window_codes(series, 2).tolist() == [0, 1, 2, 0]
    with pytest.raises(ConfigurationError):
        window_codes(series, 4)


def test_period_two_block_entropy_is_exact(make_periodic):
    # 97 bins per day gives 94 four-bit windows per day, half of each phase
    series = make_periodic("01", 4, 97)
    assert InfoTheoryService.block_entropy(series, 4) == 0.25
    assert InfoTheoryService.block_entropy(series, 1) == pytest.approx(1.0, abs=1e-3)


def test_period_two_rate_decays_like_one_over_L(make_periodic):
    series = make_periodic("01", 20, 97)
    estimate = InfoTheoryService.entropy_rate(series, 4)
    assert estimate.h == 0.25
    assert estimate.L_used == 4
    assert not estimate.plateau
    np.testing.assert_allclose(estimate.block_entropies, [1.0, 0.5, 1 / 3, 0.25], atol=1e-3)
    assert [row["L"] for row in estimate.table()] == [1, 2, 3, 4]


def test_conditional_estimate_of_period_two_reaches_zero(make_periodic):
    estimate = InfoTheoryService.entropy_rate(
        make_periodic("01", 20, 97), 4, EntropyEstimator.CONDITIONAL
    )
    assert estimate.h == pytest.approx(0.0, abs=1e-3)
    assert estimate.plateau


def test_single_block_length_never_plateaus(make_periodic):
    estimate = InfoTheoryService.entropy_rate(make_periodic("0", 2, 96), 1)
    assert estimate.h == 0.0
    assert not estimate.plateau


def test_short_series_warns(make_periodic, caplog):
    with caplog.at_level(logging.WARNING):
        InfoTheoryService.entropy_rate(make_periodic("011", 2, 96), 10)
    assert "biased low" in caplog.text


def test_entropy_rate_needs_a_positive_block_length(make_periodic):
    with pytest.raises(ArgumentError):
        InfoTheoryService.entropy_rate(make_periodic("01", 2, 96), 0)


def test_block_entropy_table(make_periodic):
    table = InfoTheoryService.block_entropy_table(make_periodic("0", 2, 96), 3)
    assert table == [(1, 0.0), (2, 0.0), (3, 0.0)]


@pytest.mark.parametrize("n,expected", [(2, 0), (3, 1), (4, 1), (5, 2), (3840, 11), (4096, 11), (4097, 12)])
def test_max_history_length(n, expected):
    assert InfoTheoryService.max_history_length(n) == expected


def test_max_history_length_needs_two_symbols():
    with pytest.raises(ArgumentError):
        InfoTheoryService.max_history_length(1)


@hypothesis_settings(max_examples=40, deadline=None)
@given(bits=st.lists(st.integers(0, 1), min_size=32, max_size=32), L=st.integers(1, 8))
def test_block_entropy_is_a_rate_in_bits(bits, L):
    series = BinarySeries(bits=np.array(bits), bin_seconds=600, bins_per_day=16, n_days=2)
    H = InfoTheoryService.block_entropy(series, L)
    assert 0.0 <= H <= 1.0 + 1e-12


@pytest.mark.slow
def test_bernoulli_entropy_rate(make_sample):
    series = make_sample("bernoulli", n_days=1000, bins_per_day=100, seed=8, p=0.3)
    estimate = InfoTheoryService.entropy_rate(series, 8)
    assert estimate.h == pytest.approx(0.8813, abs=0.02)
    assert estimate.plateau


@pytest.mark.slow
def test_conditional_estimate_matches_bursting_oracle(bursting_spec):
    series = SynthService.generate(bursting_spec, 1000, 100, seed=12)
    estimate = InfoTheoryService.entropy_rate(series, 6, EntropyEstimator.CONDITIONAL)
    assert estimate.h == pytest.approx(SynthService.oracle_entropy_rate(bursting_spec), abs=0.02)
    assert estimate.plateau
