import numpy as np
import pytest

from creditrisk.classifiers import ModelSpec, predict, train
from creditrisk.classifiers.logistic import (
    LogisticParams,
    fit_logistic,
    logistic_gradient,
    logistic_loss,
    sigmoid,
)
from creditrisk.preprocess import apply_preprocessor, fit_preprocessor
from oracles import central_difference, naive_cross_entropy, relative_error


def test_loss_matches_naive_cross_entropy(rng):
    x = rng.normal(size=(12, 3))
    y = (rng.random(12) < 0.5).astype(float)
    w, b = rng.normal(size=3), 0.3
    p = [1 / (1 + np.exp(-(row @ w + b))) for row in x]
    expected = naive_cross_entropy(p, y) + 0.5 * 0.2 * float(w @ w)
    assert logistic_loss(w, b, x, y, 0.2) == pytest.approx(expected, rel=1e-12)


def test_gradient_zero_for_symmetric_data():
    # every point carries both labels, so at w = 0 the residuals cancel
    x = np.array([[1.0, 2.0], [0.5, -3.0]] * 2)
    y = np.array([1, 1, 0, 0])
    g = logistic_gradient(np.zeros(2), 0.0, x, y, 1e-4)
    np.testing.assert_allclose(g, 0.0, atol=1e-15)


@pytest.mark.parametrize("seed", range(5))
def test_gradient_matches_central_differences(seed):
    rng = np.random.default_rng(seed)
    n, d = 15, 4
    x = rng.normal(size=(n, d))
    y = (rng.random(n) < 0.5).astype(float)
    theta = rng.normal(size=d + 1)
    l2 = 0.05

    def f(t):
        return logistic_loss(t[:-1], t[-1], x, y, l2)

    numeric = central_difference(f, theta, 1e-5)
    analytic = logistic_gradient(theta[:-1], theta[-1], x, y, l2)
    assert relative_error(analytic, numeric) < 1e-5


def test_l2_term_is_linear(rng):
    x = rng.normal(size=(10, 3))
    y = (rng.random(10) < 0.5).astype(float)
    w = rng.normal(size=3)
    lam = 0.37
    diff = logistic_gradient(w, 0.1, x, y, lam) - logistic_gradient(w, 0.1, x, y, 0.0)
    np.testing.assert_allclose(diff[:-1], lam * w, rtol=1e-12, atol=1e-15)
    assert diff[-1] == 0.0


def test_sigmoid_is_stable():
    s = sigmoid(np.array([-1000.0, 0.0, 1000.0]))
    np.testing.assert_array_equal(s, [0.0, 0.5, 1.0])


def test_separable_one_dimensional_data():
    x = np.array([[-1.0], [1.0]] * 10)
    y = np.array([0, 1] * 10)
    m = train(ModelSpec("logistic"), x, y)
    labels, _ = predict(m, x)
    assert np.all(labels == y)
    assert np.all(np.isfinite(m.params.weights)) and m.params.weights[0] > 0
    # margin sign matches the label
    assert np.all(np.sign(x[:, 0] * m.params.weights[0] + m.params.bias) == 2 * y - 1)


def test_zero_model_scores_one_half():
    m = LogisticParams(np.zeros(3), 0.0)
    x = np.random.default_rng(0).normal(size=(4, 3))
    np.testing.assert_array_equal(m.scores(x), 0.5)
    np.testing.assert_array_equal(m.labels(x), 1)


def test_loss_never_increases(small_synth):
    z = apply_preprocessor(fit_preprocessor(small_synth), small_synth)
    history = []
    fit_logistic(z, small_synth.outcomes, lr=0.1, history=history)
    assert len(history) > 10
    assert all(b <= a for a, b in zip(history, history[1:]))


def test_step_halving_keeps_loss_monotone(small_synth):
    z = apply_preprocessor(fit_preprocessor(small_synth), small_synth) * 30.0
    history = []
    fit_logistic(z, small_synth.outcomes, lr=50.0, max_iter=200, history=history)
    assert all(b <= a for a, b in zip(history, history[1:]))


def test_label_flip_negates_parameters(small_synth):
    z = apply_preprocessor(fit_preprocessor(small_synth), small_synth)[:, :4]
    a = fit_logistic(z, small_synth.outcomes)
    b = fit_logistic(z, 1 - small_synth.outcomes)
    np.testing.assert_allclose(b.weights, -a.weights, atol=1e-6)
    assert b.bias == pytest.approx(-a.bias, abs=1e-6)


def test_stops_on_small_gradient():
    x = np.array([[-1.0], [1.0]])
    y = np.array([0, 1])
    history = []
    fit_logistic(x, y, max_iter=10_000, tol=1e-2, history=history)
    assert len(history) < 10_000
