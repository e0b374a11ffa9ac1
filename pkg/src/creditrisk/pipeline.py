"""Raw records -> standardized attribute subset -> optional LDA projection -> classifier."""
from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .classifiers import ModelSpec, TrainedModel, predict, train
from .data import Dataset, FeatureId
from .errors import UnlabeledError
from .lda import fit_lda, project
from .preprocess import PreprocessorParams, apply_preprocessor, fit_preprocessor


def leading_subset(k: int) -> list:
    """The first ``k`` attributes, P1..Pk."""
    return list(FeatureId)[:k]


def _columns(features: Sequence[FeatureId]) -> list:
    return [f.index for f in features]


def fit_model(
    train_set: Dataset,
    spec: ModelSpec,
    features: Sequence[FeatureId],
    use_lda: bool,
    clip_outliers: bool = False,
    preprocessor: Optional[PreprocessorParams] = None,
) -> TrainedModel:
    """Train a self-contained model on raw records.

    The preprocessor (fitted here unless one is passed in) and the LDA
    projection are embedded in the returned model so it can score raw input.
    """
    if not train_set.labeled:
        raise UnlabeledError("training data must be labeled")
    features = list(features)
    if preprocessor is None:
        preprocessor = fit_preprocessor(train_set, clip_outliers=clip_outliers)
    y = train_set.outcomes
    z = apply_preprocessor(preprocessor, train_set)[:, _columns(features)]
    lda = None
    if use_lda:
        lda = fit_lda(z, y)
        z = project(lda, z)[:, None]
    return train(spec, z, y, feature_subset=tuple(f.key for f in features), lda=lda,
                 preprocessor=preprocessor)


def model_inputs(m: TrainedModel, d) -> np.ndarray:
    """The matrix ``m``'s classifier consumes, built from raw records."""
    z = apply_preprocessor(m.preprocessor, d)
    if m.feature_subset is not None:
        z = z[:, [FeatureId.from_key(k).index for k in m.feature_subset]]
    if m.lda is not None:
        z = project(m.lda, z)[:, None]
    return z


def score_records(m: TrainedModel, d):
    """``(labels, scores)`` arrays for raw records (a Dataset or an (n, 10) array)."""
    return predict(m, model_inputs(m, d))
