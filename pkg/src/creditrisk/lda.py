"""Two-class Fisher discriminant with a shared-covariance Gaussian Bayes rule.

For two classes the generalized eigenproblem ``S_b w = lambda S_w w`` has a
single non-trivial solution, ``w ∝ S_w^{-1} (mu1 - mu0)``, so fitting reduces
to one symmetric positive-definite solve.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateError, DimensionError, SingleClassError

RIDGE_EPS = 1e-6
PIVOT_TOL = 1e-12


@dataclass(frozen=True)
class LdaModel:
    mu0: np.ndarray
    mu1: np.ndarray
    S_w: np.ndarray
    w: np.ndarray
    priors: tuple
    ridge: float
    threshold: float
    n_fit: int = 0

    @property
    def dim(self) -> int:
        return self.w.shape[0]

    def to_dict(self) -> dict:
        return {
            "mu0": self.mu0.tolist(),
            "mu1": self.mu1.tolist(),
            "S_w": self.S_w.tolist(),
            "w": self.w.tolist(),
            "priors": [float(p) for p in self.priors],
            "ridge": float(self.ridge),
            "threshold": float(self.threshold),
            "n_fit": int(self.n_fit),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "LdaModel":
        return cls(
            mu0=np.array(doc["mu0"], dtype=float),
            mu1=np.array(doc["mu1"], dtype=float),
            S_w=np.array(doc["S_w"], dtype=float).reshape(len(doc["w"]), len(doc["w"])),
            w=np.array(doc["w"], dtype=float),
            priors=tuple(float(p) for p in doc["priors"]),
            ridge=float(doc["ridge"]),
            threshold=float(doc["threshold"]),
            n_fit=int(doc.get("n_fit", 0)),
        )


def _cholesky_ok(a: np.ndarray, tol: float):
    try:
        chol = np.linalg.cholesky(a)
    except np.linalg.LinAlgError:
        return None
    if np.min(np.diag(chol)) ** 2 < tol:
        return None
    return chol


def _chol_solve(chol: np.ndarray, b: np.ndarray) -> np.ndarray:
    # chol is lower triangular; two triangular solves
    y = np.linalg.solve(chol, b)
    return np.linalg.solve(chol.T, y)


def _dof(n: int) -> float:
    return float(max(n - 2, 1))


def fit_lda(matrix, labels) -> LdaModel:
    """Fit class means, pooled within-class scatter and the discriminant
    direction. A ridge of ``1e-6 * trace(S_w)/d`` is added only when the
    scatter matrix fails to factor."""
    x = np.asarray(matrix, dtype=float)
    if x.ndim == 1:
        x = x[:, None]
    y = np.asarray(labels).reshape(-1)
    if x.shape[1] == 0:
        raise DimensionError("LDA needs at least one feature")
    if x.shape[0] != y.shape[0]:
        raise DimensionError("matrix and labels differ in length")
    x0, x1 = x[y == 0], x[y == 1]
    if x0.shape[0] == 0 or x1.shape[0] == 0:
        raise SingleClassError("LDA needs both classes present")

    d = x.shape[1]
    mu0, mu1 = x0.mean(axis=0), x1.mean(axis=0)
    c0, c1 = x0 - mu0, x1 - mu1
    S_w = c0.T @ c0 + c1.T @ c1
    S_w = 0.5 * (S_w + S_w.T)
    delta = mu1 - mu0

    scale = np.trace(S_w) / d
    ridge = 0.0
    chol = _cholesky_ok(S_w, PIVOT_TOL * scale) if scale > 0 else None
    if chol is None:
        ridge = RIDGE_EPS * scale if scale > 0 else RIDGE_EPS
        chol = np.linalg.cholesky(S_w + ridge * np.eye(d))

    v = _chol_solve(chol, delta)
    norm = np.linalg.norm(v)
    if not np.isfinite(norm) or norm == 0.0:
        raise DegenerateError("class means coincide; no discriminant direction")
    w = v / norm
    if w @ delta < 0:
        w = -w

    n = x.shape[0]
    pi1 = x1.shape[0] / n
    pi0 = 1.0 - pi1
    # log-posterior difference is dof*|v| * (w.x - w.(mu0+mu1)/2) + ln(pi1/pi0)
    midpoint = float((((mu0 + mu1) / 2.0)[None, :] @ w)[0])
    threshold = midpoint - float(np.log(pi1 / pi0) / (_dof(n) * norm))

    return LdaModel(mu0=mu0, mu1=mu1, S_w=S_w, w=w, priors=(pi0, pi1), ridge=ridge,
                    threshold=threshold, n_fit=n)


def _as_rows(m: LdaModel, x):
    x = np.asarray(x, dtype=float)
    single = x.ndim == 1
    rows = x[None, :] if single else x
    if rows.ndim != 2 or rows.shape[1] != m.dim:
        raise DimensionError(f"expected {m.dim} features, got shape {x.shape}")
    return rows, single


def project(m: LdaModel, x):
    """``w . x`` for one row (returns a float) or for each row of a matrix."""
    rows, single = _as_rows(m, x)
    z = rows @ m.w
    return float(z[0]) if single else z


def classify_lda(m: LdaModel, x):
    """Bayes label: 1 iff the projection strictly exceeds the threshold."""
    rows, single = _as_rows(m, x)
    labels = (rows @ m.w > m.threshold).astype(np.int64)
    return int(labels[0]) if single else labels


def log_posteriors(m: LdaModel, x) -> np.ndarray:
    """Unnormalized Gaussian log-posteriors ``(n, 2)`` under the pooled covariance."""
    rows, _ = _as_rows(m, x)
    sigma = (m.S_w + m.ridge * np.eye(m.dim)) / _dof(m.n_fit)
    out = np.empty((rows.shape[0], 2))
    for k, (mu, prior) in enumerate(((m.mu0, m.priors[0]), (m.mu1, m.priors[1]))):
        a = np.linalg.solve(sigma, mu)
        out[:, k] = rows @ a - 0.5 * mu @ a + np.log(prior)
    return out
