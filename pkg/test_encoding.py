# test_encoding.py
import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from core.exceptions import ArgumentError, ConfigurationError, DataError
from domains.entities import BinarySeries, DayWindow, EventLog
from services import EncodingService

T0 = 10 * 86400


def series_of(bits, bins_per_day=None, series_id="u"):
    bits = np.asarray(bits, dtype=np.uint8)
    bins_per_day = bins_per_day or bits.size
    return BinarySeries(
        bits=bits,
        bin_seconds=600,
        bins_per_day=bins_per_day,
        n_days=bits.size // bins_per_day,
        series_id=series_id,
    )


# binarize


def test_single_event_lands_in_first_bin():
    log = EventLog(user_id="u", timestamps=[T0 + 5])
    series = EncodingService.binarize(log, T0, 1, DayWindow(0, 1200), 600)
    assert series.bits.tolist() == [1, 0]


def test_no_events_gives_all_zero_series():
    log = EventLog(user_id="quiet", timestamps=[])
    series = EncodingService.binarize(log, T0, 3)
    assert len(series) == 3 * 96
    assert series.bits.sum() == 0


def test_default_window_has_96_bins():
    assert DayWindow.default().bins(600) == 96
    log = EventLog(user_id="u", timestamps=[T0 + 7 * 3600])
    assert EncodingService.binarize(log, T0, 1).bins_per_day == 96


def test_bins_are_half_open_and_outside_events_ignored():
    window = DayWindow(7 * 3600, 23 * 3600)
    stamps = [
        T0 - 10,  # before t0
        T0 + 7 * 3600 - 1,  # before the window opens
        T0 + 7 * 3600,  # first bin
        T0 + 7 * 3600 + 600,  # second bin, not first
        T0 + 23 * 3600,  # window end is exclusive
        T0 + 86400 + 7 * 3600 + 599,  # day 1, first bin
        T0 + 2 * 86400 + 8 * 3600,  # beyond n_days
    ]
    series = EncodingService.binarize(EventLog("u", stamps), T0, 2, window, 600)
    days = series.days()
    assert days[0, :3].tolist() == [1, 1, 0]
    assert days[0].sum() == 2
    assert days[1].tolist() == [1] + [0] * 95


def test_several_events_in_one_bin_set_one_bit():
    log = EventLog("u", [T0 + 1, T0 + 2, T0 + 599])
    series = EncodingService.binarize(log, T0, 1, DayWindow(0, 1200), 600)
    assert series.bits.tolist() == [1, 0]


def test_window_must_split_into_whole_bins():
    with pytest.raises(ConfigurationError):
        EncodingService.binarize(EventLog("u", []), T0, 1, DayWindow(0, 1000), 600)


def test_unsorted_timestamps_are_rejected():
    with pytest.raises(DataError):
        EventLog("u", [T0 + 10, T0 + 5])


def test_series_rejects_non_binary_values():
    with pytest.raises(DataError):
        series_of([0, 2, 1, 0])


# coarsen


def test_coarsen_is_a_logical_or():
    series = series_of([0, 0, 1, 0])
    coarse = EncodingService.coarsen(series, 2)
    assert coarse.bits.tolist() == [0, 1]
    assert coarse.bin_seconds == 1200


def test_coarsen_one_second_bins_to_ten_minutes():
    bits = np.zeros(57600, dtype=np.uint8)
    bits[[0, 599, 600, 57599]] = 1
    series = BinarySeries(bits=bits, bin_seconds=1, bins_per_day=57600, n_days=1)
    coarse = EncodingService.coarsen(series, 600)
    assert coarse.bins_per_day == 96
    assert coarse.bits.sum() == 3
    assert coarse.bits[[0, 1, 95]].tolist() == [1, 1, 1]


def test_coarsen_by_one_is_identity():
    series = series_of([1, 0, 1, 1])
    assert EncodingService.coarsen(series, 1) == series


def test_coarsen_never_crosses_days():
    series = series_of([0, 0, 1, 1, 0, 0], bins_per_day=3)
    with pytest.raises(ConfigurationError):
        EncodingService.coarsen(series, 2)


# split


def test_split_matches_the_45_4_protocol():
    series = series_of(np.zeros(49 * 96), bins_per_day=96)
    train, test = EncodingService.split_train_test(series, 45)
    assert (len(train), len(test)) == (4320, 384)
    assert (train.n_days, test.n_days) == (45, 4)


def test_split_two_days_in_halves():
    series = series_of([1, 1, 0, 0], bins_per_day=2)
    train, test = EncodingService.split_train_test(series, 1)
    assert train.bits.tolist() == [1, 1]
    assert test.bits.tolist() == [0, 0]


def test_split_needs_a_test_day():
    series = series_of([1, 1, 0, 0], bins_per_day=2)
    with pytest.raises(ConfigurationError):
        EncodingService.split_train_test(series, 2)


# bit flips


def test_flip_nothing_and_everything():
    series = series_of(np.random.default_rng(3).integers(0, 2, 96))
    assert EncodingService.flip_bits(series, 0.0, 1) == series
    flipped = EncodingService.flip_bits(series, 1.0, 1)
    assert np.array_equal(flipped.bits, 1 - series.bits)


def test_flip_half_of_96_bits():
    series = series_of(np.zeros(96))
    flipped = EncodingService.flip_bits(series, 0.5, 7)
    assert int(np.sum(flipped.bits != series.bits)) == 48


def test_flip_is_seeded():
    series = series_of(np.zeros(96))
    a = EncodingService.flip_bits(series, 0.3, 11)
    b = EncodingService.flip_bits(series, 0.3, 11)
    assert a == b


def test_flip_rejects_bad_proportion():
    with pytest.raises(ArgumentError):
        EncodingService.flip_bits(series_of([0, 1]), 1.5, 0)


@hypothesis_settings(max_examples=50, deadline=None)
@given(
    bits=st.lists(st.integers(0, 1), min_size=1, max_size=200),
    q=st.floats(0.0, 1.0),
    seed=st.integers(0, 2**32 - 1),
)
def test_flip_changes_exactly_the_rounded_count(bits, q, seed):
    series = series_of(bits)
    flipped = EncodingService.flip_bits(series, q, seed)
    assert int(np.sum(flipped.bits != series.bits)) == int(np.floor(q * len(bits) + 0.5))


# rastergram and rates


def test_rastergram_rows_are_days():
    grid = EncodingService.rastergram(series_of([1, 0, 0, 0, 1, 1], bins_per_day=3))
    assert grid.tolist() == [[1, 0, 0], [0, 1, 1]]


def test_rastergram_shape_and_blank_grid():
    grid = EncodingService.rastergram(series_of(np.zeros(49 * 96), bins_per_day=96))
    assert grid.shape == (49, 96)
    assert not grid.any()


def test_tweet_rate_small_cases():
    assert EncodingService.tweet_rate(series_of([1, 1, 1])) == 1.0
    assert EncodingService.tweet_rate(series_of([1, 0, 0, 1])) == 0.5


@pytest.mark.slow
def test_tweet_rate_of_a_sparse_bernoulli_sample(make_sample):
    series = make_sample("bernoulli", n_days=1000, bins_per_day=100, seed=5, p=0.05)
    assert abs(EncodingService.tweet_rate(series) - 0.05) <= 0.01


def test_seconds_tweet_rate_counts_distinct_seconds():
    window = DayWindow(0, 100)
    log = EventLog("u", [T0 + 3, T0 + 3, T0 + 50, T0 + 150])
    assert EncodingService.seconds_tweet_rate(log, T0, 1, window) == pytest.approx(0.02)


def test_default_geometry_covers_all_events():
    logs = [
        EventLog("a", [T0 + 3600, T0 + 2 * 86400 + 10]),
        EventLog("b", [T0 + 100]),
        EventLog("c", []),
    ]
    t0, n_days = EncodingService.default_geometry(logs)
    assert t0 == T0
    assert n_days == 3


def test_default_geometry_needs_events():
    with pytest.raises(DataError):
        EncodingService.default_geometry([EventLog("c", [])])
