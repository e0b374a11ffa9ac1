import csv
import io

import numpy as np
import pytest

from creditrisk.classifiers import ModelKind
from creditrisk.errors import ConfigError, EmptyError, EmptyReportError, FormatVersionError, LengthError
from creditrisk.evaluate import (
    EvaluationReport,
    ExperimentConfig,
    accuracy,
    emit_report,
    lda_deltas,
    run_grid,
)
from creditrisk.synth import GeneratorConfig, generate_synthetic

FAST = {ModelKind.MLP: {"epochs": 20}}


@pytest.fixture(scope="module")
def data():
    return generate_synthetic(GeneratorConfig(n=1500, seed=5))


@pytest.fixture(scope="module")
def report(data):
    return run_grid(ExperimentConfig(seed=1, specs=FAST), data)


def test_accuracy_examples():
    assert accuracy([0, 1, 1], [0, 1, 1]) == 1.0
    assert accuracy([0, 1, 1], [1, 0, 0]) == 0.0
    assert accuracy([0, 1, 1, 0], [0, 1, 1, 1]) == 0.75


def test_accuracy_errors():
    with pytest.raises(LengthError):
        accuracy([0, 1], [0])
    with pytest.raises(EmptyError):
        accuracy([], [])


@pytest.mark.parametrize("kwargs", [
    {"attribute_counts": ()},
    {"attribute_counts": (1,)},
    {"attribute_counts": (11,)},
    {"models": ()},
    {"train_fraction": 0.0},
])
def test_config_validation(kwargs):
    with pytest.raises(ConfigError):
        ExperimentConfig(**kwargs)


def test_default_grid_has_24_cells(report):
    assert len(report.cells) == 24
    assert {key[0] for key in report.cells} == set(ModelKind)


def test_leading_subsets(report):
    for kind in ModelKind:
        for lda in (False, True):
            assert report.cell(kind, 2, lda).features == ("P1", "P2")
            assert report.cell(kind, 3, lda).features == ("P1", "P2", "P3")
            assert report.cell(kind, 4, lda).features == ("P1", "P2", "P3", "P4")


def test_accuracy_equals_confusion_counts(report):
    for c in report.cells.values():
        cm = c.confusion
        assert c.accuracy == (cm["tn"] + cm["tp"]) / (cm["tn"] + cm["fp"] + cm["fn"] + cm["tp"])
        assert sum(cm.values()) == c.test_n


def test_shared_split_without_leakage(report, data):
    train, test = set(report.train_index.tolist()), set(report.test_index.tolist())
    assert not train & test
    assert train | test == set(range(len(data)))
    assert {(c.train_n, c.test_n) for c in report.cells.values()} == {(len(train), len(test))}


def test_fitting_provenance_is_training_only(report):
    n_train = len(report.train_index)
    for (kind, k, lda), c in report.cells.items():
        assert c.preprocess_n == n_train
        assert c.lda_n == (n_train if lda else None)


def test_rerun_is_identical_except_timestamp(report, data):
    again = run_grid(ExperimentConfig(seed=1, specs=FAST), data)
    a, b = report.to_dict(), again.to_dict()
    a.pop("timestamp"), b.pop("timestamp")
    assert a == b


def test_threaded_run_matches_serial(report, data):
    threaded = run_grid(ExperimentConfig(seed=1, specs=FAST), data, workers=4)
    assert threaded.cells == report.cells


def test_json_roundtrip(report):
    again = EvaluationReport.from_json(report.to_json())
    assert again.cells == report.cells
    assert again.to_json() == report.to_json()


def test_unknown_report_version(report):
    doc = report.to_dict()
    doc["format_version"] = 7
    with pytest.raises(FormatVersionError):
        EvaluationReport.from_dict(doc)


def test_markdown_layout(report):
    lines = emit_report(report, "markdown").strip().split("\n")
    assert len(lines) == 2 + 4
    header = [h.strip() for h in lines[0].strip("|").split("|")]
    assert header == ["Model", "Before LDA (2)", "Before LDA (3)", "Before LDA (4)",
                      "After LDA (2)", "After LDA (3)", "After LDA (4)"]
    names = []
    for line in lines[2:]:
        cells = [c.strip() for c in line.strip("|").split("|")]
        names.append(cells[0])
        assert len(cells) == 7
        for value in cells[1:]:
            whole, frac = value.split(".")
            assert len(frac) == 3 and 0.0 <= float(value) <= 100.0
    assert names == ["Logistic Regression", "Adaboost Classifier", "Decision Trees", "Neural Network"]


def test_markdown_percentages(report):
    row = emit_report(report, "markdown").strip().split("\n")[2]
    first = float(row.strip("|").split("|")[1])
    assert first == pytest.approx(100 * report.cell("logistic", 2, False).accuracy, abs=5e-4)


def test_csv_export(report):
    text = emit_report(report, "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert len(text.strip().split("\n")) == 25
    assert rows[0] == ["model", "attributes", "lda", "accuracy", "tn", "fp", "fn", "tp"]
    for r in rows[1:]:
        c = report.cell(r[0], int(r[1]), r[2] == "true")
        assert float(r[3]) == c.accuracy
        assert [int(v) for v in r[4:]] == [c.confusion[k] for k in ("tn", "fp", "fn", "tp")]


def test_empty_report():
    with pytest.raises(EmptyReportError):
        emit_report(EvaluationReport(cells={}, config=ExperimentConfig()), "markdown")


def test_subgrid_and_computed_ranking(data):
    cfg = ExperimentConfig(attribute_counts=(2, 5), models=("logistic",), use_fixed_ranking=False)
    r = run_grid(cfg, data)
    assert len(r.cells) == 4
    assert len(r.cell("logistic", 5, True).features) == 5
    # the generator makes P1 the most discriminative attribute
    assert r.cell("logistic", 2, False).features[0] == "P1"


def test_lda_deltas(report):
    deltas = lda_deltas(report)
    assert set(deltas) == set(ModelKind)
    for kind, value in deltas.items():
        expected = np.mean([report.cell(kind, k, True).accuracy - report.cell(kind, k, False).accuracy
                            for k in (2, 3, 4)])
        assert value == pytest.approx(expected)
