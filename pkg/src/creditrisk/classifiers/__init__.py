"""Logistic regression, AdaBoost-SAMME, Gini tree and MLP behind one
train/predict contract."""
from .adaboost import AdaBoostParams, Stump, best_stump, fit_adaboost, samme_alpha
from .logistic import LogisticParams, fit_logistic, logistic_gradient, logistic_loss, sigmoid
from .mlp import MlpParams, fit_mlp, init_mlp, mlp_gradients, mlp_loss
from .model import (
    DEFAULT_HYPERPARAMETERS,
    MODEL_FORMAT_VERSION,
    ModelKind,
    ModelSpec,
    TrainedModel,
    predict,
    train,
)
from .tree import Leaf, Split, TreeParams, best_split, fit_tree

__all__ = [
    "AdaBoostParams", "Stump", "best_stump", "fit_adaboost", "samme_alpha",
    "LogisticParams", "fit_logistic", "logistic_gradient", "logistic_loss", "sigmoid",
    "MlpParams", "fit_mlp", "init_mlp", "mlp_gradients", "mlp_loss",
    "DEFAULT_HYPERPARAMETERS", "MODEL_FORMAT_VERSION", "ModelKind", "ModelSpec",
    "TrainedModel", "predict", "train",
    "Leaf", "Split", "TreeParams", "best_split", "fit_tree",
]
