"""Synthetic credit-application generator.

Each attribute is produced from its own latent standard normal. For bad
creditors the latent is shifted by ``separation * EFFECT_WEIGHTS[j]`` (in
latent standard deviations), then mapped through a monotone transform to the
attribute's marginal family:

    P1  1.5 * Phi(0.8 z - 0.4)             probit-normal on [0, 1.5]
    P2  21 + floor(55 * Phi(z))            discrete uniform on 21..75 (good class)
    P3, P6..P10  Poisson quantile of Phi(z)
    P4  clip(0.3 + 0.15 z, 0, 1)
    P5  exp(8.5 + 0.5 z)                   log-normal monthly income

Attributes are independent given the class. Effect weights decrease from
P1 to P10, so the point-biserial correlation ranking is P1 > P2 > ... > P10
by construction.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtr
from scipy.stats import poisson

from .data import Dataset, FeatureId, N_FEATURES
from .errors import ConfigError

EFFECT_WEIGHTS = np.array([1.0, 0.8, 0.45, 0.36, 0.28, 0.21, 0.15, 0.1, 0.055, 0.01])

# +1: bad creditors sit higher on the attribute, -1: lower.
EFFECT_SIGNS = np.array([+1, -1, +1, +1, -1, -1, +1, +1, +1, +1])

POISSON_RATES = {
    FeatureId.P3: 2.0,
    FeatureId.P6: 8.0,
    FeatureId.P7: 1.5,
    FeatureId.P8: 1.5,
    FeatureId.P9: 1.5,
    FeatureId.P10: 1.5,
}

MISSING_FEATURES = (FeatureId.P5, FeatureId.P10)


@dataclass(frozen=True)
class GeneratorConfig:
    n: int = 7778
    bad_prior: float = 0.407
    separation: float = 2.5
    missing_rate: float = 0.02
    seed: int = 0

    def validate(self):
        if int(self.n) != self.n or self.n < 0:
            raise ConfigError(f"n must be a non-negative integer, got {self.n}")
        if not 0.0 < self.bad_prior < 1.0:
            raise ConfigError(f"bad_prior must lie in (0, 1), got {self.bad_prior}")
        if not self.separation >= 0.0 or not np.isfinite(self.separation):
            raise ConfigError(f"separation must be finite and >= 0, got {self.separation}")
        if not 0.0 <= self.missing_rate < 1.0:
            raise ConfigError(f"missing_rate must lie in [0, 1), got {self.missing_rate}")
        if int(self.seed) != self.seed or self.seed < 0:
            raise ConfigError(f"seed must be an unsigned integer, got {self.seed}")


def _uniform(z):
    # keep Poisson quantiles finite in the far tails
    return np.clip(ndtr(z), 1e-12, 1.0 - 1e-12)


def _transform(feature: FeatureId, z: np.ndarray) -> np.ndarray:
    if feature is FeatureId.P1:
        return 1.5 * ndtr(0.8 * z - 0.4)
    if feature is FeatureId.P2:
        return np.minimum(21.0 + np.floor(55.0 * ndtr(z)), 75.0)
    if feature is FeatureId.P4:
        return np.clip(0.3 + 0.15 * z, 0.0, 1.0)
    if feature is FeatureId.P5:
        return np.round(np.exp(8.5 + 0.5 * z), 2)
    return poisson.ppf(_uniform(z), POISSON_RATES[feature]).astype(float)


def generate_synthetic(cfg: GeneratorConfig) -> Dataset:
    """Draw ``cfg.n`` labeled records; deterministic in ``cfg.seed``.

    The number of bad creditors is ``round(n * bad_prior)`` and their
    positions are a uniform random permutation, so each record is bad with
    probability ``bad_prior``.
    """
    cfg.validate()
    n = int(cfg.n)
    rng = np.random.default_rng(int(cfg.seed))

    n_bad = int(np.floor(n * cfg.bad_prior + 0.5))
    labels = np.zeros(n, dtype=np.int64)
    labels[:n_bad] = 1
    labels = rng.permutation(labels)

    latent = rng.standard_normal((n, N_FEATURES))
    shift = cfg.separation * EFFECT_WEIGHTS * EFFECT_SIGNS
    latent = latent + labels[:, None] * shift[None, :]

    values = np.empty((n, N_FEATURES))
    for feature in FeatureId:
        values[:, feature.index] = _transform(feature, latent[:, feature.index])

    if cfg.missing_rate > 0:
        for feature in MISSING_FEATURES:
            blank = rng.random(n) < cfg.missing_rate
            values[blank, feature.index] = np.nan

    return Dataset(values, labels)
