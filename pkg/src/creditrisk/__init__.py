"""Credit-risk assessment: preprocessing, two-class LDA, four classifiers and
a before/after-LDA evaluation grid."""
from .classifiers import ModelKind, ModelSpec, TrainedModel, predict, train
from .data import (
    FEATURES,
    CreditRecord,
    Dataset,
    FeatureId,
    filter_debt_ratio,
    load_dataset,
    save_dataset,
    stratified_split,
)
from .errors import CreditRiskError
from .evaluate import EvaluationReport, ExperimentConfig, accuracy, emit_report, lda_deltas, run_grid
from .lda import LdaModel, classify_lda, fit_lda, project
from .pipeline import fit_model, score_records
from .preprocess import (
    FeatureRanking,
    PreprocessorParams,
    apply_preprocessor,
    fit_preprocessor,
    rank_features,
)
from .synth import GeneratorConfig, generate_synthetic

__version__ = "0.1.0"
