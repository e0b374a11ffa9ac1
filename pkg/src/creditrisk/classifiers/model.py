"""Common train/predict contract and the versioned JSON model document."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from ..errors import DimensionError, FormatVersionError, SingleClassError, SpecError
from ..lda import LdaModel
from ..preprocess import PreprocessorParams
from .adaboost import AdaBoostParams, fit_adaboost
from .logistic import LogisticParams, fit_logistic
from .mlp import MlpParams, fit_mlp
from .tree import TreeParams, fit_tree

MODEL_FORMAT_VERSION = 1


class ModelKind(str, Enum):
    LOGISTIC = "logistic"
    ADABOOST = "adaboost"
    TREE = "tree"
    MLP = "mlp"

    @property
    def display_name(self) -> str:
        return DISPLAY_NAMES[self]


DISPLAY_NAMES = {
    ModelKind.LOGISTIC: "Logistic Regression",
    ModelKind.ADABOOST: "Adaboost Classifier",
    ModelKind.TREE: "Decision Trees",
    ModelKind.MLP: "Neural Network",
}

DEFAULT_HYPERPARAMETERS = {
    ModelKind.LOGISTIC: {"lr": 0.1, "l2": 1e-4, "max_iter": 1000, "tol": 1e-6},
    ModelKind.ADABOOST: {"rounds": 50},
    ModelKind.TREE: {"max_depth": 6, "min_split": 2},
    ModelKind.MLP: {"hidden": 16, "lr": 0.01, "epochs": 200, "batch": 32},
}

INTEGER_HYPERPARAMETERS = {"max_iter", "rounds", "max_depth", "min_split", "hidden", "epochs", "batch"}

PARAM_TYPES = {
    ModelKind.LOGISTIC: LogisticParams,
    ModelKind.ADABOOST: AdaBoostParams,
    ModelKind.TREE: TreeParams,
    ModelKind.MLP: MlpParams,
}


@dataclass(frozen=True)
class ModelSpec:
    kind: ModelKind
    hyperparameters: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        try:
            kind = ModelKind(self.kind)
        except ValueError:
            raise SpecError(f"unknown model kind {self.kind!r}") from None
        object.__setattr__(self, "kind", kind)
        defaults = DEFAULT_HYPERPARAMETERS[kind]
        unknown = set(self.hyperparameters) - set(defaults)
        if unknown:
            raise SpecError(f"unknown hyperparameters for {kind.value}: {sorted(unknown)}")
        merged = {**defaults, **self.hyperparameters}
        for name, value in merged.items():
            if not isinstance(value, (int, float)) or isinstance(value, bool) or not np.isfinite(value) or value <= 0:
                raise SpecError(f"hyperparameter {name} must be a positive number, got {value!r}")
            if name in INTEGER_HYPERPARAMETERS:
                if value != int(value):
                    raise SpecError(f"hyperparameter {name} must be an integer, got {value!r}")
                merged[name] = int(value)
            else:
                merged[name] = float(value)
        object.__setattr__(self, "hyperparameters", merged)


@dataclass(frozen=True)
class TrainedModel:
    """Learned parameters plus the metadata needed to score raw records.

    ``input_dim`` is the width of the matrix the classifier itself sees: the
    number of selected features, or 1 after an LDA projection.
    """

    spec: ModelSpec
    params: object
    input_dim: int
    feature_subset: Optional[tuple] = None  # FeatureId keys, e.g. ("P1", "P2")
    lda: Optional[LdaModel] = None
    preprocessor: Optional[PreprocessorParams] = None

    @property
    def kind(self) -> ModelKind:
        return self.spec.kind

    def to_dict(self) -> dict:
        return {
            "format_version": MODEL_FORMAT_VERSION,
            "kind": self.kind.value,
            "hyperparameters": dict(self.spec.hyperparameters),
            "seed": int(self.spec.seed),
            "input_dim": int(self.input_dim),
            "feature_subset": None if self.feature_subset is None else list(self.feature_subset),
            "lda": None if self.lda is None else self.lda.to_dict(),
            "preprocessor": None if self.preprocessor is None else self.preprocessor.to_dict(),
            "parameters": self.params.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, doc: dict) -> "TrainedModel":
        if doc.get("format_version") != MODEL_FORMAT_VERSION:
            raise FormatVersionError(f"unsupported model format_version {doc.get('format_version')!r}")
        spec = ModelSpec(doc["kind"], dict(doc["hyperparameters"]), int(doc["seed"]))
        return cls(
            spec=spec,
            params=PARAM_TYPES[spec.kind].from_dict(doc["parameters"]),
            input_dim=int(doc["input_dim"]),
            feature_subset=None if doc.get("feature_subset") is None else tuple(doc["feature_subset"]),
            lda=None if doc.get("lda") is None else LdaModel.from_dict(doc["lda"]),
            preprocessor=None if doc.get("preprocessor") is None else PreprocessorParams.from_dict(doc["preprocessor"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "TrainedModel":
        return cls.from_dict(json.loads(text))


def train(spec: ModelSpec, matrix, labels, **metadata) -> TrainedModel:
    """Fit the classifier named by ``spec``. Extra keyword arguments
    (``feature_subset``, ``lda``, ``preprocessor``) are stored on the model."""
    x = np.asarray(matrix, dtype=float)
    if x.ndim == 1:
        x = x[:, None]
    y = np.asarray(labels).reshape(-1).astype(np.int64)
    if x.shape[0] != y.shape[0]:
        raise DimensionError("matrix and labels differ in length")
    if x.shape[0] < 2 or not ((y == 0).any() and (y == 1).any()):
        raise SingleClassError("training needs at least one record of each class")
    if not np.all(np.isfinite(x)):
        raise DimensionError("training matrix contains non-finite values")

    hp = spec.hyperparameters
    if spec.kind is ModelKind.LOGISTIC:
        params = fit_logistic(x, y, hp["lr"], hp["l2"], hp["max_iter"], hp["tol"])
    elif spec.kind is ModelKind.ADABOOST:
        params = fit_adaboost(x, y, hp["rounds"])
    elif spec.kind is ModelKind.TREE:
        params = fit_tree(x, y, hp["max_depth"], hp["min_split"])
    else:
        params = fit_mlp(x, y, hp["hidden"], hp["lr"], hp["epochs"], hp["batch"], seed=spec.seed)
    return TrainedModel(spec=spec, params=params, input_dim=x.shape[1], **metadata)


def predict(m: TrainedModel, x):
    """Label and score in [0, 1] for one row (scalars) or a matrix (arrays)."""
    x = np.asarray(x, dtype=float)
    single = x.ndim == 1
    rows = x[None, :] if single else x
    if rows.ndim != 2 or rows.shape[1] != m.input_dim:
        raise DimensionError(f"expected {m.input_dim} features, got shape {x.shape}")
    labels = m.params.labels(rows)
    scores = m.params.scores(rows)
    if single:
        return int(labels[0]), float(scores[0])
    return labels, scores
