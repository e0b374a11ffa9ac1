"""CART-style binary classification tree with Gini impurity."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

GAIN_TIE = 1e-12


def gini(n_pos, n):
    p = n_pos / n
    return 2.0 * p * (1.0 - p)


@dataclass(frozen=True)
class Leaf:
    label: int


@dataclass(frozen=True)
class Split:
    feature: int
    threshold: float  # x <= threshold goes left
    left: "Node"
    right: "Node"


Node = Union[Leaf, Split]


def best_split(x: np.ndarray, y: np.ndarray):
    """Best ``(feature, threshold, gain)`` by Gini gain, or ``None`` if every
    feature is constant on this node.

    Candidates are midpoints between consecutive distinct sorted values.
    Gains within ``GAIN_TIE`` count as equal; ties go to the lowest feature,
    then the lowest threshold.
    """
    n = y.shape[0]
    n_pos_total = int(y.sum())
    parent = gini(n_pos_total, n)
    best = None
    for j in range(x.shape[1]):
        order = np.argsort(x[:, j], kind="stable")
        xs = x[order, j]
        cut = np.flatnonzero(xs[:-1] < xs[1:])
        if cut.size == 0:
            continue
        n_left = cut + 1
        n_right = n - n_left
        pos_left = np.cumsum(y[order])[cut]
        pos_right = n_pos_total - pos_left
        child = (n_left * gini(pos_left, n_left) + n_right * gini(pos_right, n_right)) / n
        gains = parent - child
        top = gains.max()
        i = int(np.flatnonzero(gains >= top - GAIN_TIE)[0])
        if best is None or gains[i] > best[2] + GAIN_TIE:
            threshold = 0.5 * (xs[cut[i]] + xs[cut[i] + 1])
            best = (j, float(threshold), float(gains[i]))
    return best


def _majority(y: np.ndarray) -> int:
    return 1 if 2 * int(y.sum()) > y.shape[0] else 0


def _grow(x, y, depth, max_depth, min_split) -> Node:
    n = y.shape[0]
    n_pos = int(y.sum())
    if n_pos == 0 or n_pos == n or depth >= max_depth or n < min_split:
        return Leaf(_majority(y))
    found = best_split(x, y)
    if found is None:
        return Leaf(_majority(y))
    feature, threshold, _ = found
    go_left = x[:, feature] <= threshold
    return Split(
        feature,
        threshold,
        _grow(x[go_left], y[go_left], depth + 1, max_depth, min_split),
        _grow(x[~go_left], y[~go_left], depth + 1, max_depth, min_split),
    )


def depth_of(node: Node) -> int:
    if isinstance(node, Leaf):
        return 0
    return 1 + max(depth_of(node.left), depth_of(node.right))


def _node_to_dict(node: Node) -> dict:
    if isinstance(node, Leaf):
        return {"label": node.label}
    return {
        "feature": node.feature,
        "threshold": node.threshold,
        "left": _node_to_dict(node.left),
        "right": _node_to_dict(node.right),
    }


def _node_from_dict(doc: dict) -> Node:
    if "label" in doc:
        return Leaf(int(doc["label"]))
    return Split(int(doc["feature"]), float(doc["threshold"]),
                 _node_from_dict(doc["left"]), _node_from_dict(doc["right"]))


@dataclass(frozen=True)
class TreeParams:
    root: Node

    @property
    def depth(self) -> int:
        return depth_of(self.root)

    def labels(self, x: np.ndarray) -> np.ndarray:
        out = np.empty(x.shape[0], dtype=np.int64)
        stack = [(self.root, np.arange(x.shape[0]))]
        while stack:
            node, idx = stack.pop()
            if isinstance(node, Leaf):
                out[idx] = node.label
                continue
            left = x[idx, node.feature] <= node.threshold
            stack.append((node.left, idx[left]))
            stack.append((node.right, idx[~left]))
        return out

    def scores(self, x: np.ndarray) -> np.ndarray:
        return self.labels(x).astype(float)

    def to_dict(self):
        return {"root": _node_to_dict(self.root)}

    @classmethod
    def from_dict(cls, doc):
        return cls(_node_from_dict(doc["root"]))


def fit_tree(matrix, labels, max_depth=6, min_split=2) -> TreeParams:
    """Grow greedily until a node is pure, reaches ``max_depth``, holds fewer
    than ``min_split`` records, or has no candidate threshold."""
    x = np.asarray(matrix, dtype=float)
    y = np.asarray(labels).astype(np.int64)
    return TreeParams(_grow(x, y, 0, max_depth, min_split))
