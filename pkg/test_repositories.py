# test_repositories.py
import csv
import json

import numpy as np
import pytest

from core.exceptions import ConfigurationError, DataError
from domains.entities import BinarySeries, CrossValidationResult, EchoStateModel
from dtos import CssrConfig, EsnConfig, EvaluationSummaryDTO
from repositories import (
    EventRepository,
    ModelRepository,
    RasterRepository,
    ReportRepository,
    SeriesRepository,
)
from repositories.report_repository import format_value
from services import CssrService, EsnService, EvaluationService

from test_evaluation import row


# events


def test_csv_events_with_header_and_bad_lines(tmp_path, caplog):
    path = tmp_path / "events.csv"
    path.write_text(
        "user_id,epoch_second\n"
        "bob,100\n"
        "alice,50\n"
        "alice,not-a-time\n"
        "broken line\n"
        "alice,70.9\n"
        "bob,200\n"
    )
    logs = EventRepository.load(str(path))
    assert [log.user_id for log in logs] == ["alice", "bob"]
    assert logs[0].timestamps.tolist() == [50, 70]
    assert logs[1].timestamps.tolist() == [100, 200]
    assert "invalid timestamp" in caplog.text
    assert "expected `user_id,epoch_second`" in caplog.text


def test_unsorted_user_is_skipped(tmp_path, caplog):
    path = tmp_path / "events.csv"
    path.write_text("a,10\na,5\nb,1\n")
    logs = EventRepository.load(str(path))
    assert [log.user_id for log in logs] == ["b"]
    assert "rejecting user a" in caplog.text


def test_jsonl_events(tmp_path):
    path = tmp_path / "events.jsonl"
    path.write_text(
        json.dumps({"user_id": "u2", "timestamps": [1, 2, 3]})
        + "\n{not json}\n"
        + json.dumps({"user_id": "u1", "timestamps": []})
        + "\n"
    )
    logs = EventRepository.load(str(path))
    assert [log.user_id for log in logs] == ["u1", "u2"]
    assert len(logs[1]) == 3


def test_empty_event_file_is_a_data_error(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("")
    with pytest.raises(DataError):
        EventRepository.load(str(path))


def test_missing_event_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        EventRepository.load(str(tmp_path / "nope.csv"))


# series files


def test_series_file_layout(tmp_path):
    path = tmp_path / "series.txt"
    b = BinarySeries.from_bitstring("0110", 600, 2, series_id="b")
    a = BinarySeries.from_bitstring("1000", 600, 2, series_id="a")
    SeriesRepository.save(str(path), [b, a])

    assert path.read_text().splitlines() == [
        "#bin_seconds=600",
        "#bins_per_day=2",
        "#n_days=2",
        "a\t1000",
        "b\t0110",
    ]
    loaded = SeriesRepository.load(str(path))
    assert [s.series_id for s in loaded] == ["a", "b"]
    assert loaded[1] == b


def test_series_geometry_must_agree(tmp_path):
    a = BinarySeries.from_bitstring("10", 600, 2, series_id="a")
    b = BinarySeries.from_bitstring("1000", 600, 2, series_id="b")
    with pytest.raises(ConfigurationError):
        SeriesRepository.save(str(tmp_path / "s.txt"), [a, b])


@pytest.mark.parametrize(
    "text",
    [
        "a\t0101\n",
        "#bin_seconds=600\n#bins_per_day=2\n#n_days=2\na 0101\n",
        "#bin_seconds=600\n#bins_per_day=2\n#n_days=3\na\t0101\n",
        "#bin_seconds=600\n#bins_per_day=2\n#n_days=2\na\t01x1\n",
        "#bin_seconds=600\n#bins_per_day=2\n#n_days=2\n",
    ],
)
def test_malformed_series_files(tmp_path, text):
    path = tmp_path / "bad.txt"
    path.write_text(text)
    with pytest.raises(DataError):
        SeriesRepository.load(str(path))


def test_select_user():
    series = [
        BinarySeries.from_bitstring("01", 600, 2, series_id="a"),
        BinarySeries.from_bitstring("10", 600, 2, series_id="b"),
    ]
    assert SeriesRepository.select(series).series_id == "a"
    assert SeriesRepository.select(series, "b").series_id == "b"
    with pytest.raises(DataError):
        SeriesRepository.select(series, "zed")


# models


def test_causal_state_model_file(tmp_path, make_periodic):
    model = CssrService.infer(make_periodic("0011", 20, 96), CssrConfig(history_length=2))
    path = tmp_path / "model.json"
    ModelRepository.save_causal_state_model(str(path), model, metadata={"series_id": "p"})

    data = json.loads(path.read_text())
    assert data["model_type"] == "causal_state_model"
    assert data["metadata"] == {"series_id": "p"}

    loaded = ModelRepository.load(str(path))
    assert loaded.states == model.states
    assert loaded.transitions == model.transitions
    assert loaded.suffix_map == model.suffix_map
    assert CssrService.statistical_complexity(loaded) == pytest.approx(2.0)


def test_echo_state_model_file(tmp_path, make_sample):
    series = make_sample("bursting", n_days=3)
    model = EsnService.train(EsnService.build(EsnConfig(n_reservoir=8, seed=2)), series)
    path = tmp_path / "esn.json"
    ModelRepository.save_echo_state_model(str(path), model)

    loaded = ModelRepository.load(str(path))
    assert isinstance(loaded, EchoStateModel)
    assert loaded.config == model.config
    np.testing.assert_array_equal(loaded.W_out, model.W_out)
    np.testing.assert_array_equal(
        EsnService.predict_sequence(loaded, series)[1], EsnService.predict_sequence(model, series)[1]
    )


def test_invalid_model_file(tmp_path):
    path = tmp_path / "model.json"
    path.write_text('{"model_type": "causal_state_model", "states": ["S0"], "emit": {"S0": 2.0}}')
    with pytest.raises(DataError):
        ModelRepository.load(str(path))


# reports


def test_format_value():
    assert format_value(None) == ""
    assert format_value(0.1) == "0.1"
    assert format_value(2) == "2"
    assert format_value(1 / 3) == repr(1 / 3)


def test_evaluation_report_header_and_order(tmp_path):
    rows = [row("b", 0.8, None), row("a", 0.7, 0.65)]
    path = tmp_path / "report.csv"
    assert ReportRepository.write_evaluation(str(path), rows) == 2

    lines = path.read_text().splitlines()
    assert lines[0] == (
        "series_id,tweet_rate,baseline_acc,csm_acc,esn_acc,csm_improvement,esn_improvement,"
        "selected_L,stat_complexity,h_train,h_test,abs_entropy_diff,quartile"
    )
    records = list(csv.DictReader(lines))
    assert [r["series_id"] for r in records] == ["a", "b"]
    assert records[1]["esn_acc"] == ""
    assert records[1]["quartile"] == ""
    assert float(records[0]["csm_improvement"]) == 0.7 - 0.6


def test_cv_and_entropy_tables(tmp_path):
    result = CrossValidationResult(
        selected_L=1, mean_accuracy={0: 0.5, 1: 0.9, 2: 0.9}, n_folds=3, fold_train_length=64
    )
    cv_path = tmp_path / "cv.csv"
    ReportRepository.write_cv(str(cv_path), [("u", result)])
    assert cv_path.read_text().splitlines() == [
        "series_id,L,mean_accuracy,selected",
        "u,0,0.5,0",
        "u,1,0.9,1",
        "u,2,0.9,0",
    ]

    entropy_path = tmp_path / "entropy.csv"
    ReportRepository.write_entropy_table(str(entropy_path), [(1, 1.0), (2, 0.5)])
    assert entropy_path.read_text().splitlines() == ["L,H_L", "1,1.0", "2,0.5"]


def test_summary_json(tmp_path):
    rows = [row(f"u{i}", 0.7, 0.6) for i in range(4)]
    report = EvaluationService.quartile_by_entropy_divergence(rows)
    summary = EvaluationSummaryDTO(
        n_series=4,
        n_failed=0,
        quartile_means=report.quartile_means,
        state_census=EvaluationService.state_count_census(rows),
    )
    path = tmp_path / "summary.json"
    ReportRepository.write_summary(str(path), summary)
    data = json.loads(path.read_text())
    assert data["n_series"] == 4
    assert data["quartile_means"]["1"] == pytest.approx(0.1)
    assert data["state_census"]["2"]["count"] == 4


# rastergrams


def test_raster_text_and_image(tmp_path):
    grid = np.array([[1, 0, 0], [0, 1, 1]], dtype=np.uint8)
    assert RasterRepository.to_text(grid) == "100\n011\n"

    image = tmp_path / "raster.pgm"
    RasterRepository.write_pgm(str(image), grid)
    assert image.read_text().splitlines() == ["P2", "3 2", "1", "0 1 1", "1 0 0"]
