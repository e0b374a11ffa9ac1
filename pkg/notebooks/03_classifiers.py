# %% [markdown]
# # The four classifiers, with and without the projection
#
# Each model is trained through the same pipeline the CLI uses, so the
# returned object carries its preprocessor and can score raw records.

# %%
import numpy as np

from creditrisk import GeneratorConfig, ModelKind, ModelSpec, generate_synthetic
from creditrisk.data import filter_debt_ratio, stratified_split
from creditrisk.pipeline import fit_model, leading_subset, score_records

d = filter_debt_ratio(generate_synthetic(GeneratorConfig(n=4000, seed=1)))
train, test = stratified_split(d, 0.75, seed=1)

for kind in ModelKind:
    for lda in (False, True):
        m = fit_model(train, ModelSpec(kind, seed=1), leading_subset(4), lda)
        labels, scores = score_records(m, test)
        print(f"{kind.display_name:<22} lda={lda!s:<5} accuracy {np.mean(labels == test.outcomes):.4f}")

# %% [markdown]
# Models serialize to JSON and predict identically after reloading.

# %%
from creditrisk import TrainedModel

m = fit_model(train, ModelSpec("adaboost", {"rounds": 20}), leading_subset(3), True)
again = TrainedModel.from_json(m.to_json())
print(np.array_equal(score_records(m, test)[1], score_records(again, test)[1]))
print(m.to_json()[:400], "...")
