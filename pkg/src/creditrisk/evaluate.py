"""Before/after-LDA accuracy grid over models and attribute-subset sizes."""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Optional

import numpy as np

from .classifiers import ModelKind, ModelSpec
from .data import Dataset, FeatureId, stratified_split_indices
from .errors import (
    CellError,
    ConfigError,
    CreditRiskError,
    EmptyError,
    EmptyReportError,
    FormatVersionError,
    LengthError,
    UnlabeledError,
)
from .pipeline import fit_model, model_inputs, leading_subset
from .classifiers import predict
from .preprocess import apply_preprocessor, fit_preprocessor, rank_features

REPORT_FORMAT_VERSION = 1


def accuracy(predicted, actual) -> float:
    predicted = np.asarray(predicted).reshape(-1)
    actual = np.asarray(actual).reshape(-1)
    if predicted.shape != actual.shape:
        raise LengthError(f"length mismatch: {predicted.size} vs {actual.size}")
    if predicted.size == 0:
        raise EmptyError("accuracy of zero predictions is undefined")
    return float(np.mean(predicted == actual))


def confusion(predicted, actual) -> dict:
    p = np.asarray(predicted).reshape(-1)
    a = np.asarray(actual).reshape(-1)
    return {
        "tn": int(np.sum((a == 0) & (p == 0))),
        "fp": int(np.sum((a == 0) & (p == 1))),
        "fn": int(np.sum((a == 1) & (p == 0))),
        "tp": int(np.sum((a == 1) & (p == 1))),
    }


@dataclass(frozen=True)
class ExperimentConfig:
    attribute_counts: tuple = (2, 3, 4)
    models: tuple = tuple(ModelKind)
    use_fixed_ranking: bool = True
    train_fraction: float = 0.75
    seed: int = 0
    specs: dict = field(default_factory=dict)  # ModelKind -> hyperparameter overrides
    clip_outliers: bool = False

    def __post_init__(self):
        counts = tuple(int(k) for k in self.attribute_counts)
        if not counts or any(k < 2 or k > 10 for k in counts):
            raise ConfigError(f"attribute_counts must be non-empty and within 2..10, got {counts}")
        models = tuple(ModelKind(m) for m in self.models)
        if not models:
            raise ConfigError("models must be non-empty")
        if not 0.0 < self.train_fraction <= 1.0:
            raise ConfigError(f"train_fraction must lie in (0, 1], got {self.train_fraction}")
        object.__setattr__(self, "attribute_counts", counts)
        object.__setattr__(self, "models", models)
        object.__setattr__(self, "specs", {ModelKind(k): dict(v) for k, v in self.specs.items()})

    def spec_for(self, kind: ModelKind) -> ModelSpec:
        return ModelSpec(kind, self.specs.get(kind, {}), self.seed)

    def to_dict(self) -> dict:
        return {
            "attribute_counts": list(self.attribute_counts),
            "models": [m.value for m in self.models],
            "use_fixed_ranking": self.use_fixed_ranking,
            "train_fraction": self.train_fraction,
            "seed": self.seed,
            "specs": {k.value: self.spec_for(k).hyperparameters for k in self.models},
            "clip_outliers": self.clip_outliers,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "ExperimentConfig":
        return cls(
            attribute_counts=tuple(doc["attribute_counts"]),
            models=tuple(doc["models"]),
            use_fixed_ranking=bool(doc["use_fixed_ranking"]),
            train_fraction=float(doc["train_fraction"]),
            seed=int(doc["seed"]),
            specs=dict(doc.get("specs", {})),
            clip_outliers=bool(doc.get("clip_outliers", False)),
        )


@dataclass(frozen=True)
class Cell:
    accuracy: float
    confusion: dict
    train_n: int
    test_n: int
    features: tuple
    preprocess_n: int
    lda_n: Optional[int]


@dataclass
class EvaluationReport:
    cells: dict  # (ModelKind, k, lda) -> Cell
    config: ExperimentConfig
    timestamp: str = ""
    train_index: Optional[np.ndarray] = None
    test_index: Optional[np.ndarray] = None

    def cell(self, kind, k, lda) -> Cell:
        return self.cells[(ModelKind(kind), int(k), bool(lda))]

    def to_dict(self) -> dict:
        cells = []
        for (kind, k, lda), c in sorted(self.cells.items(), key=lambda kv: _cell_order(kv[0])):
            row = {"model": kind.value, "attributes": k, "lda": lda}
            row.update(asdict(c))
            row["features"] = list(c.features)
            cells.append(row)
        doc = {
            "format_version": REPORT_FORMAT_VERSION,
            "timestamp": self.timestamp,
            "config": self.config.to_dict(),
            "cells": cells,
        }
        if self.train_index is not None:
            doc["split"] = {"train": self.train_index.tolist(), "test": self.test_index.tolist()}
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, doc: dict) -> "EvaluationReport":
        if doc.get("format_version") != REPORT_FORMAT_VERSION:
            raise FormatVersionError(f"unsupported report format_version {doc.get('format_version')!r}")
        cells = {}
        for row in doc["cells"]:
            key = (ModelKind(row["model"]), int(row["attributes"]), bool(row["lda"]))
            cells[key] = Cell(
                accuracy=float(row["accuracy"]),
                confusion={k: int(v) for k, v in row["confusion"].items()},
                train_n=int(row["train_n"]),
                test_n=int(row["test_n"]),
                features=tuple(row["features"]),
                preprocess_n=int(row["preprocess_n"]),
                lda_n=None if row["lda_n"] is None else int(row["lda_n"]),
            )
        split = doc.get("split")
        return cls(
            cells=cells,
            config=ExperimentConfig.from_dict(doc["config"]),
            timestamp=doc.get("timestamp", ""),
            train_index=None if split is None else np.array(split["train"], dtype=np.int64),
            test_index=None if split is None else np.array(split["test"], dtype=np.int64),
        )

    @classmethod
    def from_json(cls, text: str) -> "EvaluationReport":
        return cls.from_dict(json.loads(text))


def _cell_order(key):
    kind, k, lda = key
    return (list(ModelKind).index(kind), lda, k)


def _subsets(cfg: ExperimentConfig, z_train: np.ndarray, y_train: np.ndarray) -> dict:
    if cfg.use_fixed_ranking:
        return {k: leading_subset(k) for k in cfg.attribute_counts}
    ranking = rank_features(z_train, y_train)
    return {k: ranking.top(k) for k in cfg.attribute_counts}


def run_grid(cfg: ExperimentConfig, d: Dataset, workers: int = 1) -> EvaluationReport:
    """Train and test every (model, attribute count, LDA flag) cell on one
    shared stratified split. Preprocessing and LDA see training rows only.

    ``workers > 1`` runs cells on a thread pool; results are keyed by cell,
    so the report does not depend on execution order.
    """
    if not d.labeled:
        raise UnlabeledError("evaluation needs a labeled dataset")
    train_idx, test_idx = stratified_split_indices(d.outcomes, cfg.train_fraction, cfg.seed)
    if test_idx.size == 0:
        raise ConfigError("train_fraction leaves no test records")
    train_set, test_set = d.subset(train_idx), d.subset(test_idx)
    pre = fit_preprocessor(train_set, clip_outliers=cfg.clip_outliers)
    subsets = _subsets(cfg, apply_preprocessor(pre, train_set), train_set.outcomes)

    keys = [(kind, k, lda) for kind in cfg.models for lda in (False, True) for k in cfg.attribute_counts]

    def run_cell(key):
        kind, k, lda = key
        try:
            model = fit_model(train_set, cfg.spec_for(kind), subsets[k], lda, preprocessor=pre)
            labels, _ = predict(model, model_inputs(model, test_set))
        except CreditRiskError as exc:
            raise CellError(f"{kind.value}/k={k}/lda={lda}", exc) from exc
        return Cell(
            accuracy=accuracy(labels, test_set.outcomes),
            confusion=confusion(labels, test_set.outcomes),
            train_n=len(train_set),
            test_n=len(test_set),
            features=tuple(f.key for f in subsets[k]),
            preprocess_n=model.preprocessor.n_fit,
            lda_n=None if model.lda is None else model.lda.n_fit,
        )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_cell, keys))
    else:
        results = [run_cell(key) for key in keys]

    return EvaluationReport(
        cells=dict(zip(keys, results)),
        config=cfg,
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
        train_index=train_idx,
        test_index=test_idx,
    )


def lda_deltas(r: EvaluationReport) -> dict:
    """Mean (after-LDA minus before-LDA) accuracy per model."""
    out = {}
    for kind in r.config.models:
        diffs = [
            r.cells[(kind, k, True)].accuracy - r.cells[(kind, k, False)].accuracy
            for k in r.config.attribute_counts
            if (kind, k, True) in r.cells and (kind, k, False) in r.cells
        ]
        if diffs:
            out[kind] = float(np.mean(diffs))
    return out


def emit_report(r: EvaluationReport, fmt: str = "markdown") -> str:
    """Render the accuracy grid as a markdown table or as CSV."""
    if not r.cells:
        raise EmptyReportError("report has no cells")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["model", "attributes", "lda", "accuracy", "tn", "fp", "fn", "tp"])
        for (kind, k, lda), c in sorted(r.cells.items(), key=lambda kv: _cell_order(kv[0])):
            cm = c.confusion
            writer.writerow([kind.value, k, "true" if lda else "false", repr(c.accuracy),
                             cm["tn"], cm["fp"], cm["fn"], cm["tp"]])
        return buf.getvalue()
    if fmt != "markdown":
        raise ValueError(f"unknown report format {fmt!r}")

    kinds = [m for m in ModelKind if any(key[0] is m for key in r.cells)]
    counts = sorted({key[1] for key in r.cells})
    header = ["Model"] + [f"Before LDA ({k})" for k in counts] + [f"After LDA ({k})" for k in counts]
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join(["---"] + ["---:"] * (len(header) - 1)) + "|",
    ]
    for kind in kinds:
        row = [kind.display_name]
        for lda in (False, True):
            for k in counts:
                c = r.cells.get((kind, k, lda))
                row.append("" if c is None else f"{100.0 * c.accuracy:.3f}")
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines) + "\n"
