"""L2-regularized logistic regression trained by full-batch gradient descent."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import expit, log_expit

MIN_LR = 1e-6


def sigmoid(t):
    return expit(np.asarray(t, dtype=float))


def log_sigmoid(t):
    return log_expit(np.asarray(t, dtype=float))


@dataclass(frozen=True)
class LogisticParams:
    weights: np.ndarray
    bias: float

    def scores(self, x: np.ndarray) -> np.ndarray:
        return sigmoid(x @ self.weights + self.bias)

    def labels(self, x: np.ndarray) -> np.ndarray:
        return (self.scores(x) >= 0.5).astype(np.int64)

    def to_dict(self):
        return {"weights": self.weights.tolist(), "bias": float(self.bias)}

    @classmethod
    def from_dict(cls, doc):
        return cls(np.array(doc["weights"], dtype=float), float(doc["bias"]))


def logistic_loss(weights, bias, matrix, labels, l2):
    """Mean cross-entropy plus ``(l2/2) * ||weights||^2``."""
    t = matrix @ weights + bias
    y = labels
    nll = -(y * log_sigmoid(t) + (1.0 - y) * log_sigmoid(-t))
    return float(nll.mean() + 0.5 * l2 * weights @ weights)


def logistic_gradient(weights, bias, matrix, labels, l2):
    """Gradient of :func:`logistic_loss`; returns ``d + 1`` values, bias last."""
    x = np.asarray(matrix, dtype=float)
    y = np.asarray(labels, dtype=float)
    w = np.asarray(weights, dtype=float)
    residual = sigmoid(x @ w + bias) - y
    n = x.shape[0]
    grad_w = x.T @ residual / n + l2 * w
    grad_b = residual.sum() / n
    return np.append(grad_w, grad_b)


def fit_logistic(matrix, labels, lr=0.1, l2=1e-4, max_iter=1000, tol=1e-6, history=None):
    """Gradient descent from zero.

    A step that raises the loss is rejected and the learning rate halved;
    training stops once the rate is already at ``MIN_LR``. The recorded loss
    sequence therefore never increases.
    """
    x = np.asarray(matrix, dtype=float)
    y = np.asarray(labels, dtype=float)
    w = np.zeros(x.shape[1])
    b = 0.0
    loss = logistic_loss(w, b, x, y, l2)
    if history is not None:
        history.append(loss)
    for _ in range(int(max_iter)):
        g = logistic_gradient(w, b, x, y, l2)
        if np.max(np.abs(g)) < tol:
            break
        w_new = w - lr * g[:-1]
        b_new = b - lr * g[-1]
        new_loss = logistic_loss(w_new, b_new, x, y, l2)
        if new_loss > loss:
            if lr <= MIN_LR:
                break
            lr = max(lr / 2.0, MIN_LR)
            continue
        w, b, loss = w_new, b_new, new_loss
        if history is not None:
            history.append(loss)
    return LogisticParams(w, float(b))
