import json

import numpy as np
import pytest

from creditrisk.classifiers import ModelKind, ModelSpec, TrainedModel, predict, train
from creditrisk.data import Dataset
from creditrisk.errors import DimensionError, FormatVersionError, SingleClassError, SpecError
from creditrisk.pipeline import fit_model, leading_subset, score_records
from creditrisk.synth import GeneratorConfig, generate_synthetic


@pytest.fixture(scope="module")
def thousand():
    return generate_synthetic(GeneratorConfig(n=1000, seed=11))


def test_spec_defaults_are_merged():
    s = ModelSpec("adaboost")
    assert s.kind is ModelKind.ADABOOST and s.hyperparameters == {"rounds": 50}
    assert ModelSpec("mlp", {"epochs": 5.0}).hyperparameters["epochs"] == 5


@pytest.mark.parametrize("kind,hp", [
    ("svm", {}),
    ("tree", {"depth": 3}),
    ("tree", {"max_depth": 0}),
    ("mlp", {"hidden": 2.5}),
    ("logistic", {"lr": float("nan")}),
    ("logistic", {"lr": True}),
])
def test_invalid_specs(kind, hp):
    with pytest.raises(SpecError):
        ModelSpec(kind, hp)


def test_train_errors():
    with pytest.raises(SingleClassError):
        train(ModelSpec("tree"), np.zeros((3, 2)), [0, 0, 0])
    with pytest.raises(DimensionError):
        train(ModelSpec("tree"), np.zeros((3, 2)), [0, 1])
    m = train(ModelSpec("tree"), [[0.0, 1.0], [1.0, 0.0]], [0, 1])
    with pytest.raises(DimensionError):
        predict(m, [1.0, 2.0, 3.0])


@pytest.mark.parametrize("kind", list(ModelKind))
@pytest.mark.parametrize("lda", [False, True])
def test_roundtrip_predictions_are_exact(thousand, kind, lda):
    spec = ModelSpec(kind, {"epochs": 10} if kind is ModelKind.MLP else {}, seed=2)
    m = fit_model(thousand, spec, leading_subset(4), lda)
    again = TrainedModel.from_json(m.to_json())
    a_labels, a_scores = score_records(m, thousand)
    b_labels, b_scores = score_records(again, thousand)
    np.testing.assert_array_equal(a_labels, b_labels)
    np.testing.assert_array_equal(a_scores, b_scores)
    assert again.to_json() == m.to_json()


def test_document_layout(thousand):
    m = fit_model(thousand, ModelSpec("logistic"), leading_subset(3), True)
    doc = json.loads(m.to_json())
    assert doc["format_version"] == 1
    assert doc["kind"] == "logistic"
    assert doc["feature_subset"] == ["P1", "P2", "P3"]
    assert doc["input_dim"] == 1
    assert doc["lda"] is not None and doc["preprocessor"]["format_version"] == 1


def test_unknown_format_version(thousand):
    doc = fit_model(thousand, ModelSpec("tree"), leading_subset(2), False).to_dict()
    doc["format_version"] = 2
    with pytest.raises(FormatVersionError):
        TrainedModel.from_dict(doc)


def test_scores_raw_records_with_missing_values(thousand):
    m = fit_model(thousand, ModelSpec("logistic"), leading_subset(10), False)
    values = np.array(thousand.values[:3])
    values[:, 4] = np.nan
    labels, scores = score_records(m, Dataset(values))
    assert labels.shape == (3,) and np.all(np.isfinite(scores))
