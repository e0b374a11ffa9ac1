"""Brute-force reference computations. Deliberately naive: plain loops,
no shared code with the package under test."""
import math

import numpy as np


def exhaustive_stump_error(x, y, w):
    """Minimum weighted error over all (feature, midpoint, polarity) stumps."""
    best = math.inf
    n, d = len(x), len(x[0])
    for j in range(d):
        values = sorted(set(float(row[j]) for row in x))
        for a, b in zip(values, values[1:]):
            t = (a + b) / 2.0
            for polarity in (+1, -1):
                err = 0.0
                for i in range(n):
                    above = x[i][j] > t
                    pred = 1 if (above if polarity > 0 else not above) else 0
                    if pred != y[i]:
                        err += w[i]
                best = min(best, err)
    return best


def _gini_counts(labels):
    n = len(labels)
    if n == 0:
        return 0.0
    p = sum(labels) / n
    return 1.0 - p * p - (1.0 - p) * (1.0 - p)


def exhaustive_root_split(x, y):
    """(feature, threshold, gain) maximizing Gini gain; ties to the lowest
    feature then the lowest threshold (gains within 1e-12 count as equal)."""
    n, d = len(x), len(x[0])
    labels = [int(v) for v in y]
    parent = _gini_counts(labels)
    best = None
    for j in range(d):
        values = sorted(set(float(row[j]) for row in x))
        for a, b in zip(values, values[1:]):
            t = (a + b) / 2.0
            left = [labels[i] for i in range(n) if x[i][j] <= t]
            right = [labels[i] for i in range(n) if x[i][j] > t]
            child = (len(left) * _gini_counts(left) + len(right) * _gini_counts(right)) / n
            gain = parent - child
            if best is None or gain > best[2] + 1e-12:
                best = (j, t, gain)
    return best


def rayleigh_grid_direction(x, y, n_angles=100_000):
    """Unit 2-D direction maximizing w'S_b w / w'S_w w over an angular grid."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y)
    mu0 = x[y == 0].mean(axis=0)
    mu1 = x[y == 1].mean(axis=0)
    sw = np.zeros((2, 2))
    for row, label in zip(x, y):
        c = row - (mu1 if label == 1 else mu0)
        sw += np.outer(c, c)
    diff = mu1 - mu0
    sb = np.outer(diff, diff)
    theta = np.linspace(0.0, np.pi, n_angles, endpoint=False)
    dirs = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    num = np.einsum("ij,jk,ik->i", dirs, sb, dirs)
    den = np.einsum("ij,jk,ik->i", dirs, sw, dirs)
    return dirs[int(np.argmax(num / den))]


def central_difference(f, params, step):
    """Numerical gradient of scalar ``f`` w.r.t. the flat float array ``params``."""
    params = np.array(params, dtype=float)
    grad = np.zeros_like(params)
    for i in range(params.size):
        up = params.copy()
        down = params.copy()
        up[i] += step
        down[i] -= step
        grad[i] = (f(up) - f(down)) / (2.0 * step)
    return grad


def relative_error(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float(np.linalg.norm(a - b) / max(np.linalg.norm(a) + np.linalg.norm(b), 1e-12))


def naive_cross_entropy(p, y):
    total = 0.0
    for pi, yi in zip(p, y):
        total -= yi * math.log(pi) + (1 - yi) * math.log(1 - pi)
    return total / len(y)
