# test_esn.py
from dataclasses import replace

import numpy as np
import pytest

from core.exceptions import DataError, ModelStateError, NumericalError
from domains.entities import BinarySeries
from domains.enums import EsnFeedback
from dtos import EsnConfig
from services import EncodingService, EsnService
from services.esn_service import day_inputs


@pytest.fixture
def small_config():
    return EsnConfig(n_reservoir=32, seed=3)


# construction


@pytest.mark.parametrize("seed", range(20))
def test_reservoir_is_scaled_to_the_target_radius(seed):
    model = EsnService.build(EsnConfig(seed=seed))
    assert model.W.shape == (128, 128)
    assert model.W_in.shape == (128, 10)
    assert model.W_fb.shape == (128,)
    assert EsnService.spectral_radius(model.W) == pytest.approx(0.99, abs=1e-6)


def test_same_seed_gives_identical_weights():
    a = EsnService.build(EsnConfig(n_reservoir=16, seed=42))
    b = EsnService.build(EsnConfig(n_reservoir=16, seed=42))
    c = EsnService.build(EsnConfig(n_reservoir=16, seed=43))
    assert np.array_equal(a.W, b.W)
    assert np.array_equal(a.W_in, b.W_in)
    assert np.array_equal(a.W_fb, b.W_fb)
    assert not np.array_equal(a.W, c.W)


def test_weights_come_from_the_configured_interval():
    model = EsnService.build(EsnConfig(n_reservoir=16, weight_interval=(-0.5, 0.5), seed=1))
    assert model.W_in.min() >= -0.5 and model.W_in.max() < 0.5
    assert model.W_fb.min() >= -0.5 and model.W_fb.max() < 0.5


def test_degenerate_reservoir_gives_up_after_retries(monkeypatch):
    calls = []

    def degenerate(config, attempt):
        calls.append(attempt)
        raise NumericalError("Degenerate reservoir sample", diagnostics={"attempt": attempt})

    monkeypatch.setattr(EsnService, "_sample", staticmethod(degenerate))
    with pytest.raises(NumericalError) as info:
        EsnService.build(EsnConfig(seed=0))
    assert calls == [0, 1, 2, 3, 4]
    assert info.value.diagnostics["attempt"] == 4


def test_invalid_weight_interval_is_rejected():
    with pytest.raises(ValueError):
        EsnConfig(weight_interval=(1.0, 0.0))


# spectral radius


def test_spectral_radius_known_matrices():
    assert EsnService.spectral_radius(np.eye(3)) == pytest.approx(1.0)
    assert EsnService.spectral_radius(np.diag([0.5, -0.9])) == pytest.approx(0.9)


def test_spectral_radius_of_a_rotation():
    theta = 0.3
    rotation = 0.8 * np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])
    big = np.zeros((4, 4))
    big[:2, :2] = rotation
    big[2:, 2:] = 0.1 * np.eye(2)
    assert EsnService.spectral_radius(big) == pytest.approx(0.8, abs=1e-8)


# state update


def test_zero_weights_give_half_activations(small_config):
    model = EsnService.build(small_config)
    zero = replace(
        model,
        W=np.zeros_like(model.W),
        W_in=np.zeros_like(model.W_in),
        W_fb=np.zeros_like(model.W_fb),
    )
    y = EsnService.step(zero, np.ones(10), z_prev=1.0)
    np.testing.assert_allclose(y, 0.5)


def test_state_forgets_its_initial_condition():
    model = EsnService.build(EsnConfig(seed=5))
    a, b = model.clone(), model.clone()
    a.y = np.zeros(model.n_reservoir)
    b.y = np.ones(model.n_reservoir)
    rng = np.random.default_rng(0)
    for _ in range(1000):
        x = rng.integers(0, 2, 10)
        EsnService.step(a, x, z_prev=0.0)
        EsnService.step(b, x, z_prev=0.0)
    assert np.max(np.abs(a.y - b.y)) < 1e-6


def test_stepped_states_stay_inside_the_unit_interval(small_config):
    model = EsnService.build(small_config)
    assert np.all(model.y == 0.0)
    rng = np.random.default_rng(1)
    for _ in range(50):
        y = EsnService.step(model, rng.integers(0, 2, 10), z_prev=0.99)
        assert np.all((y > 0.0) & (y < 1.0))


def test_step_checks_input_width(small_config):
    with pytest.raises(ValueError):
        EsnService.step(EsnService.build(small_config), np.ones(3))


def test_day_inputs_are_zero_padded_windows():
    rows = day_inputs(np.array([1, 0, 1]), 2)
    assert rows.tolist() == [[0, 0], [0, 1], [1, 0]]


# training


def test_readout_has_inputs_plus_reservoir_weights(make_sample):
    model = EsnService.train(EsnService.build(EsnConfig(seed=1)), make_sample("bursting", n_days=10))
    assert model.W_out.shape == (138,)
    assert model.is_trained


def test_design_matrix_skips_the_washout(small_config, make_sample):
    series = make_sample("bursting", n_days=3, bins_per_day=50)
    model = EsnService.build(small_config.model_copy(update={"washout": 20}))
    S, D = EsnService.design_matrix(model, series)
    assert S.shape == (3 * 30, 10 + 32)
    assert D.shape == (90,)
    assert np.all(np.abs(D) <= np.log(99) + 1e-9)


def test_default_design_matrix_keeps_every_step(small_config, make_sample):
    series = make_sample("bursting", n_days=3, bins_per_day=50)
    S, D = EsnService.design_matrix(EsnService.build(small_config), series)
    assert S.shape == (150, 10 + 32)
    assert D.shape == (150,)


def test_teacher_forcing_uses_the_clipped_previous_bit(small_config):
    series = BinarySeries.from_bitstring("1" * 30, 600, 30)
    model = EsnService.build(small_config.model_copy(update={"washout": 0}))
    S, _ = EsnService.design_matrix(model, series)
    # Second step sees the clipped first bit as feedback
    x0, x1 = day_inputs(series.bits, 10)[:2]
    y0 = 1.0 / (1.0 + np.exp(-(model.W_in @ x0)))
    y1 = 1.0 / (1.0 + np.exp(-(model.W_in @ x1 + model.W @ y0 + model.W_fb * 0.99)))
    np.testing.assert_allclose(S[1, 10:], y1)


def test_pseudo_inverse_readout_beats_perturbations(small_config, make_sample):
    series = make_sample("three_state", n_days=8, seed=3)
    model = EsnService.train(EsnService.build(small_config), series)
    S, D = EsnService.design_matrix(model, series)
    best = EsnService.readout_mse(S, D, model.W_out)
    assert best == pytest.approx(EsnService.training_mse(model, series))

    rng = np.random.default_rng(9)
    for _ in range(100):
        perturbed = model.W_out + rng.normal(scale=0.01, size=model.W_out.shape)
        assert best <= EsnService.readout_mse(S, D, perturbed) + 1e-12


def test_constant_zero_series_is_predicted_perfectly(small_config):
    train = BinarySeries.from_bitstring("0" * 960, 600, 96)
    model = EsnService.train(EsnService.build(small_config), train)
    predicted, probs = EsnService.predict_sequence(model, train)
    assert predicted.sum() == 0
    assert np.all(probs < 0.5)


def test_observed_feedback_replays_the_training_dynamics(small_config, make_sample):
    series = make_sample("bursting", n_days=6, seed=4, p_AA=0.9, p_PP=0.8)
    model = EsnService.train(EsnService.build(small_config), series)
    S, _ = EsnService.design_matrix(model, series)
    _, probs = EsnService.predict_sequence(model, series)
    np.testing.assert_allclose(probs, 1.0 / (1.0 + np.exp(-(S @ model.W_out))))


def test_predicted_feedback_runs_on_rounded_outputs(small_config, make_sample):
    series = make_sample("bursting", n_days=6, seed=4, p_AA=0.9, p_PP=0.8)
    observed = EsnService.train(EsnService.build(small_config), series)
    free = replace(observed, config=observed.config.model_copy(update={"feedback": EsnFeedback.PREDICTED}))
    predicted, probs = EsnService.predict_sequence(free, series)
    assert predicted.tolist() == (probs > 0.5).astype(int).tolist()
    # The first step of every day has no feedback yet
    first = EsnService.predict_sequence(observed, series)[1][:: series.bins_per_day]
    np.testing.assert_allclose(probs[:: series.bins_per_day], first)


@pytest.mark.slow
@pytest.mark.parametrize("feedback", list(EsnFeedback))
def test_period_two_continuation(make_periodic, feedback):
    series = make_periodic("01", 49, 96)
    train, test = EncodingService.split_train_test(series, 45)
    model = EsnService.train(EsnService.build(EsnConfig(feedback=feedback)), train)
    predicted, _ = EsnService.predict_sequence(model, test)
    assert np.mean(predicted == test.bits) >= 0.99


@pytest.mark.slow
def test_default_network_beats_the_majority_guess_on_bursting(make_sample):
    gains = []
    for seed in range(5):
        series = make_sample("bursting", seed=seed, p_AA=0.9, p_PP=0.9)
        train, test = EncodingService.split_train_test(series, 45)
        model = EsnService.train(EsnService.build(EsnConfig(seed=seed)), train)
        predicted, _ = EsnService.predict_sequence(model, test)
        majority = int(train.bits.mean() > 0.5)
        gains.append(np.mean(predicted == test.bits) - np.mean(test.bits == majority))
        assert gains[-1] > 0.0
    assert np.mean(gains) > 0.1


def test_predicting_needs_a_trained_model(small_config, make_sample):
    with pytest.raises(ModelStateError):
        EsnService.predict_sequence(EsnService.build(small_config), make_sample("bernoulli", n_days=2))


def test_too_short_series_is_rejected(small_config):
    with pytest.raises(DataError):
        EsnService.train(EsnService.build(small_config), BinarySeries.from_bitstring("01" * 5, 600, 10))
