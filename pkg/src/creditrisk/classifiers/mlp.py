"""One-hidden-layer perceptron (logistic units) trained with mini-batch SGD."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .logistic import log_sigmoid, sigmoid


@dataclass(frozen=True)
class MlpParams:
    W1: np.ndarray  # (hidden, d)
    b1: np.ndarray  # (hidden,)
    W2: np.ndarray  # (1, hidden)
    b2: np.ndarray  # (1,)

    def forward(self, x: np.ndarray):
        hidden = sigmoid(x @ self.W1.T + self.b1)
        logit = hidden @ self.W2[0] + self.b2[0]
        return hidden, logit

    def scores(self, x: np.ndarray) -> np.ndarray:
        return sigmoid(self.forward(x)[1])

    def labels(self, x: np.ndarray) -> np.ndarray:
        return (self.scores(x) >= 0.5).astype(np.int64)

    def to_dict(self):
        return {k: getattr(self, k).tolist() for k in ("W1", "b1", "W2", "b2")}

    @classmethod
    def from_dict(cls, doc):
        W1 = np.array(doc["W1"], dtype=float)
        return cls(W1, np.array(doc["b1"], dtype=float),
                   np.array(doc["W2"], dtype=float).reshape(1, -1), np.array(doc["b2"], dtype=float))


def init_mlp(d: int, hidden: int, rng: np.random.Generator) -> MlpParams:
    a1 = 1.0 / np.sqrt(d)
    a2 = 1.0 / np.sqrt(hidden)
    return MlpParams(
        W1=rng.uniform(-a1, a1, (hidden, d)),
        b1=rng.uniform(-a1, a1, hidden),
        W2=rng.uniform(-a2, a2, (1, hidden)),
        b2=rng.uniform(-a2, a2, 1),
    )


def mlp_loss(model: MlpParams, x, y) -> float:
    _, t = model.forward(np.asarray(x, dtype=float))
    y = np.asarray(y, dtype=float)
    return float(-(y * log_sigmoid(t) + (1.0 - y) * log_sigmoid(-t)).mean())


def mlp_gradients(model: MlpParams, x, y) -> MlpParams:
    """Backpropagated gradients of the batch-mean cross-entropy, shaped like ``model``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n = x.shape[0]
    hidden, logit = model.forward(x)
    d_logit = (sigmoid(logit) - y) / n
    gW2 = (d_logit @ hidden)[None, :]
    gb2 = np.array([d_logit.sum()])
    d_hidden = np.outer(d_logit, model.W2[0]) * hidden * (1.0 - hidden)
    gW1 = d_hidden.T @ x
    gb1 = d_hidden.sum(axis=0)
    return MlpParams(gW1, gb1, gW2, gb2)


def fit_mlp(matrix, labels, hidden=16, lr=0.01, epochs=200, batch=32, seed=0) -> MlpParams:
    x = np.asarray(matrix, dtype=float)
    y = np.asarray(labels, dtype=float)
    rng = np.random.default_rng(seed)
    model = init_mlp(x.shape[1], int(hidden), rng)
    W1, b1, W2, b2 = (a.copy() for a in (model.W1, model.b1, model.W2, model.b2))
    n = x.shape[0]
    for _ in range(int(epochs)):
        order = rng.permutation(n)
        for start in range(0, n, int(batch)):
            idx = order[start:start + int(batch)]
            g = mlp_gradients(MlpParams(W1, b1, W2, b2), x[idx], y[idx])
            W1 -= lr * g.W1
            b1 -= lr * g.b1
            W2 -= lr * g.W2
            b2 -= lr * g.b2
    return MlpParams(W1, b1, W2, b2)
