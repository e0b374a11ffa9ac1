"""AdaBoost-SAMME over axis-aligned decision stumps (two classes)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

N_CLASSES = 2
ERR_CLAMP = 1e-10


class Stump(NamedTuple):
    feature: int
    threshold: float
    polarity: int  # +1: predict 1 when x > threshold; -1: predict 1 when x <= threshold

    def predict(self, x: np.ndarray) -> np.ndarray:
        above = x[:, self.feature] > self.threshold
        return (above if self.polarity > 0 else ~above).astype(np.int64)


def best_stump(x: np.ndarray, y: np.ndarray, w: np.ndarray):
    """Weighted-error-minimizing stump over every feature, every midpoint
    between consecutive distinct values, and both polarities.

    Ties go to the lowest feature, then the lowest threshold, then polarity +1.
    Returns ``(stump, error)`` or ``(None, inf)`` when every feature is constant.
    """
    best, best_err = None, np.inf
    pos_w = w * (y == 1)
    neg_w = w * (y == 0)
    total_pos, total_neg = pos_w.sum(), neg_w.sum()
    for j in range(x.shape[1]):
        order = np.argsort(x[:, j], kind="stable")
        xs = x[order, j]
        cut = np.flatnonzero(xs[:-1] < xs[1:])
        if cut.size == 0:
            continue
        cum_pos = np.cumsum(pos_w[order])[cut]
        cum_neg = np.cumsum(neg_w[order])[cut]
        # +1: left predicts 0, right predicts 1
        err_plus = cum_pos + (total_neg - cum_neg)
        err_minus = cum_neg + (total_pos - cum_pos)
        errs = np.column_stack([err_plus, err_minus])
        k = int(np.argmin(errs))
        err = float(errs.flat[k])
        if err < best_err:
            i, side = divmod(k, 2)
            threshold = 0.5 * (xs[cut[i]] + xs[cut[i] + 1])
            best, best_err = Stump(j, float(threshold), +1 if side == 0 else -1), err
    return best, best_err


@dataclass(frozen=True)
class AdaBoostParams:
    stumps: tuple
    alphas: tuple

    def votes(self, x: np.ndarray):
        pos = np.zeros(x.shape[0])
        for stump, alpha in zip(self.stumps, self.alphas):
            pos += alpha * stump.predict(x)
        return pos, float(sum(self.alphas))

    def scores(self, x: np.ndarray) -> np.ndarray:
        pos, total = self.votes(x)
        if total <= 0:
            return np.full(x.shape[0], 0.5)
        return pos / total

    def labels(self, x: np.ndarray) -> np.ndarray:
        pos, total = self.votes(x)
        return (pos > total - pos).astype(np.int64)

    def to_dict(self):
        return {
            "stumps": [[s.feature, s.threshold, s.polarity] for s in self.stumps],
            "alphas": [float(a) for a in self.alphas],
        }

    @classmethod
    def from_dict(cls, doc):
        stumps = tuple(Stump(int(f), float(t), int(p)) for f, t, p in doc["stumps"])
        return cls(stumps, tuple(float(a) for a in doc["alphas"]))


def samme_alpha(err: float, n_classes: int = N_CLASSES) -> float:
    err = min(max(err, ERR_CLAMP), 1.0 - ERR_CLAMP)
    return float(np.log((1.0 - err) / err) + np.log(n_classes - 1))


def fit_adaboost(matrix, labels, rounds=50, trace=None):
    """Boost up to ``rounds`` stumps.

    Stops early when the best stump is no better than chance
    (error >= 1 - 1/K) or classifies the weighted sample perfectly. If
    ``trace`` is a list, ``(sample_weights, stump, error)`` is appended for
    every accepted round.
    """
    x = np.asarray(matrix, dtype=float)
    y = np.asarray(labels).astype(np.int64)
    n = x.shape[0]
    w = np.full(n, 1.0 / n)
    stumps, alphas = [], []
    for _ in range(int(rounds)):
        stump, err = best_stump(x, y, w)
        if stump is None or err >= 1.0 - 1.0 / N_CLASSES:
            break
        alpha = samme_alpha(err)
        if trace is not None:
            trace.append((w.copy(), stump, err))
        stumps.append(stump)
        alphas.append(alpha)
        if err <= ERR_CLAMP:
            break
        miss = stump.predict(x) != y
        w = w * np.exp(alpha * miss)
        w /= w.sum()
    return AdaBoostParams(tuple(stumps), tuple(alphas))
