import math

import numpy as np
import pytest

from creditrisk.classifiers import ModelSpec, predict, train
from creditrisk.classifiers.adaboost import AdaBoostParams, Stump, best_stump, fit_adaboost, samme_alpha
from oracles import exhaustive_stump_error


def random_dataset(seed, n_max=50):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(6, n_max + 1))
    d = int(rng.integers(1, 4))
    # coarse grid so duplicated values and ties occur
    x = np.round(rng.normal(size=(n, d)) * 2) / 2
    y = (x[:, 0] + rng.normal(scale=1.0, size=n) > 0).astype(int)
    if y.min() == y.max():
        y[0] = 1 - y[0]
    return x, y


def test_alpha_at_half_error_is_zero():
    assert samme_alpha(0.5) == 0.0


def test_alpha_formula():
    assert samme_alpha(0.2) == pytest.approx(math.log(4.0))
    # clamped at 1e-10
    assert samme_alpha(0.0) == pytest.approx(math.log((1 - 1e-10) / 1e-10))


def test_single_member_ensemble_votes():
    m = AdaBoostParams((Stump(0, 0.5, +1),), (1.0,))
    x = np.array([[1.0], [0.0]])
    np.testing.assert_array_equal(m.labels(x), [1, 0])
    np.testing.assert_array_equal(m.scores(x), [1.0, 0.0])


def test_tied_vote_goes_to_zero():
    m = AdaBoostParams((Stump(0, 0.5, +1), Stump(0, 0.5, -1)), (1.0, 1.0))
    x = np.array([[1.0], [0.0]])
    np.testing.assert_array_equal(m.labels(x), [0, 0])
    np.testing.assert_array_equal(m.scores(x), [0.5, 0.5])


def test_stump_on_single_feature():
    x = np.array([[0.0], [1.0], [2.0], [3.0]])
    y = np.array([0, 0, 1, 1])
    stump, err = best_stump(x, y, np.full(4, 0.25))
    assert stump == Stump(0, 1.5, +1) and err == 0.0
    stump, err = best_stump(x, 1 - y, np.full(4, 0.25))
    assert stump == Stump(0, 1.5, -1) and err == 0.0


def test_constant_features_give_no_stump():
    stump, err = best_stump(np.ones((4, 2)), np.array([0, 1, 0, 1]), np.full(4, 0.25))
    assert stump is None and err == math.inf
    m = fit_adaboost(np.ones((4, 2)), np.array([0, 1, 0, 1]))
    assert m.stumps == () and m.alphas == ()


def test_chance_level_stops_before_first_round():
    # XOR: every stump has weighted error exactly 1/2
    x = np.array([[0.0, 0.0], [1.0, 1.0], [0.0, 1.0], [1.0, 0.0]])
    y = np.array([0, 0, 1, 1])
    _, err = best_stump(x, y, np.full(4, 0.25))
    assert err == 0.5
    assert fit_adaboost(x, y).stumps == ()


def test_perfect_stump_stops_boosting():
    x = np.array([[0.0], [1.0], [2.0], [3.0]])
    y = np.array([0, 0, 1, 1])
    m = fit_adaboost(x, y, rounds=50)
    assert len(m.stumps) == 1
    assert m.alphas[0] == pytest.approx(samme_alpha(0.0))


@pytest.mark.parametrize("seed", range(10))
def test_every_round_attains_exhaustive_minimum(seed):
    x, y = random_dataset(seed)
    trace = []
    m = fit_adaboost(x, y, rounds=15, trace=trace)
    assert len(trace) == len(m.stumps) == len(m.alphas)
    for weights, stump, err in trace:
        oracle = exhaustive_stump_error(x.tolist(), y.tolist(), weights.tolist())
        assert abs(err - oracle) <= 1e-12
        direct = float(np.sum(weights[stump.predict(x) != y]))
        assert abs(direct - err) <= 1e-12


def test_boosting_beats_a_single_stump():
    rng = np.random.default_rng(4)
    x = rng.uniform(-1, 1, size=(300, 2))
    y = ((x[:, 0] > 0) & (x[:, 1] > 0)).astype(int)
    one = fit_adaboost(x, y, rounds=1)
    many = fit_adaboost(x, y, rounds=50)
    assert np.mean(many.labels(x) == y) > np.mean(one.labels(x) == y)


def test_train_and_predict_contract(small_synth):
    x = small_synth.values[:, :4]
    m = train(ModelSpec("adaboost", {"rounds": 10}), x, small_synth.outcomes)
    label, score = predict(m, x[0])
    assert label in (0, 1) and 0.0 <= score <= 1.0
    labels, scores = predict(m, x)
    np.testing.assert_array_equal(labels, (scores > 0.5).astype(int))
