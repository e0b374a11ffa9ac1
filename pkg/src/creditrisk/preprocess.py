"""Cleaning and scaling: mean imputation, ln(1+x) on monthly income,
optional IQR winsorizing, z-score standardization, and the point-biserial
feature ranking."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .data import FEATURES, Dataset, FeatureId, N_FEATURES
from .errors import (
    AllMissingError,
    DegenerateError,
    DimensionError,
    EmptyError,
    FormatVersionError,
)

PARAMS_FORMAT_VERSION = 1
INCOME = FeatureId.P5.index


@dataclass(frozen=True)
class PreprocessorParams:
    impute_means: np.ndarray
    log_income: bool
    clip_bounds: tuple  # per feature: (low, high) or None
    scale_means: np.ndarray
    scale_stds: np.ndarray
    n_fit: int = 0

    def to_dict(self) -> dict:
        return {
            "format_version": PARAMS_FORMAT_VERSION,
            "n_fit": int(self.n_fit),
            "log_income": bool(self.log_income),
            "impute_means": [float(v) for v in self.impute_means],
            "clip_bounds": [None if b is None else [float(b[0]), float(b[1])] for b in self.clip_bounds],
            "scale_means": [float(v) for v in self.scale_means],
            "scale_stds": [float(v) for v in self.scale_stds],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "PreprocessorParams":
        if doc.get("format_version") != PARAMS_FORMAT_VERSION:
            raise FormatVersionError(f"unsupported preprocessor format_version {doc.get('format_version')!r}")
        return cls(
            impute_means=np.array(doc["impute_means"], dtype=float),
            log_income=bool(doc["log_income"]),
            clip_bounds=tuple(None if b is None else (float(b[0]), float(b[1])) for b in doc["clip_bounds"]),
            scale_means=np.array(doc["scale_means"], dtype=float),
            scale_stds=np.array(doc["scale_stds"], dtype=float),
            n_fit=int(doc["n_fit"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "PreprocessorParams":
        return cls.from_dict(json.loads(text))

    def __eq__(self, other):
        if not isinstance(other, PreprocessorParams):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    __hash__ = None


def _impute(values: np.ndarray, means: np.ndarray) -> np.ndarray:
    return np.where(np.isnan(values), means[None, :], values)


def _log_income(x: np.ndarray) -> np.ndarray:
    x = x.copy()
    x[:, INCOME] = np.log1p(x[:, INCOME])
    return x


def _clip(x: np.ndarray, bounds) -> np.ndarray:
    x = x.copy()
    for j, b in enumerate(bounds):
        if b is not None:
            x[:, j] = np.clip(x[:, j], b[0], b[1])
    return x


def fit_preprocessor(train: Dataset, log_income: bool = True, clip_outliers: bool = False) -> PreprocessorParams:
    """Fit imputation, clipping and scaling statistics on ``train`` only."""
    values = train.values
    if values.shape[0] == 0:
        raise EmptyError("cannot fit a preprocessor on an empty dataset")
    present = ~np.isnan(values)
    for feature in FEATURES:
        if not present[:, feature.index].any():
            raise AllMissingError(feature.key)

    means = np.array([values[present[:, j], j].mean() for j in range(N_FEATURES)])
    x = _impute(values, means)
    if log_income:
        x = _log_income(x)

    if clip_outliers:
        q1, q3 = np.percentile(x, [25, 75], axis=0)
        iqr = q3 - q1
        bounds = tuple((float(lo), float(hi)) for lo, hi in zip(q1 - 1.5 * iqr, q3 + 1.5 * iqr))
        x = _clip(x, bounds)
    else:
        bounds = (None,) * N_FEATURES

    return PreprocessorParams(
        impute_means=means,
        log_income=log_income,
        clip_bounds=bounds,
        scale_means=x.mean(axis=0),
        scale_stds=x.std(axis=0),
        n_fit=values.shape[0],
    )


def apply_preprocessor(p: PreprocessorParams, d) -> np.ndarray:
    """Map records to the standardized ``(n, 10)`` feature matrix.

    ``d`` may be a ``Dataset`` or a raw ``(n, 10)`` array with ``nan`` for
    missing cells. Each row is transformed independently.
    """
    values = d.values if isinstance(d, Dataset) else np.atleast_2d(np.asarray(d, dtype=float))
    if values.shape[1] != N_FEATURES:
        raise DimensionError(f"expected {N_FEATURES} columns, got {values.shape[1]}")
    x = _impute(values, p.impute_means)
    if p.log_income:
        x = _log_income(x)
    x = _clip(x, p.clip_bounds)
    stds = p.scale_stds
    safe = np.where(stds > 0, stds, 1.0)
    z = (x - p.scale_means) / safe
    z[:, stds == 0] = 0.0
    return z


@dataclass(frozen=True)
class FeatureRanking:
    entries: tuple  # ((FeatureId, correlation), ...), |correlation| descending

    @property
    def order(self) -> list:
        return [f for f, _ in self.entries]

    def top(self, k: int) -> list:
        return self.order[:k]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def point_biserial(column: np.ndarray, labels: np.ndarray) -> float:
    """Pearson correlation of ``column`` with 0/1 ``labels``; 0 if ``column`` is constant."""
    xc = column - column.mean()
    yc = labels - labels.mean()
    sxx = float(xc @ xc)
    syy = float(yc @ yc)
    if sxx == 0.0 or syy == 0.0:
        return 0.0
    r = float(xc @ yc) / np.sqrt(sxx * syy)
    return float(np.clip(r, -1.0, 1.0))


def rank_features(matrix, labels, features: Optional[Sequence[FeatureId]] = None) -> FeatureRanking:
    """Rank columns by |point-biserial correlation| with the label.

    Ties keep feature order (P1 before P10). A constant column gets r = 0.
    """
    x = np.asarray(matrix, dtype=float)
    y = np.asarray(labels, dtype=float).reshape(-1)
    features = list(FEATURES if features is None else features)
    if x.ndim != 2 or x.shape[1] != len(features):
        raise DimensionError(f"matrix must have {len(features)} columns")
    if x.shape[0] != y.shape[0]:
        raise DimensionError("matrix and labels differ in length")
    if x.shape[0] < 2 or np.unique(y).size < 2:
        raise DegenerateError("labels must contain both classes")
    corrs = [point_biserial(x[:, j], y) for j in range(x.shape[1])]
    order = sorted(range(len(features)), key=lambda j: (-abs(corrs[j]), features[j].index))
    return FeatureRanking(tuple((features[j], corrs[j]) for j in order))
