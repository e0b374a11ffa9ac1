# %% [markdown]
# # Synthetic credit records and preprocessing
#
# Generate a labeled dataset, look at the raw attributes, then fit the
# preprocessor on a training split and check what it does to each column.

# %%
import numpy as np

from creditrisk import FEATURES, GeneratorConfig, generate_synthetic
from creditrisk.data import filter_debt_ratio, stratified_split
from creditrisk.preprocess import apply_preprocessor, fit_preprocessor, rank_features

d = generate_synthetic(GeneratorConfig(n=7778, seed=0))
print(len(d), "records, bad fraction", d.outcomes.mean())

# %% [markdown]
# Raw attribute ranges. Income (P5) is heavy tailed and some cells are missing.

# %%
for f in FEATURES:
    col = d.values[:, f.index]
    print(f"{f.key:>3} {f.column:<40} min {np.nanmin(col):10.2f} max {np.nanmax(col):10.2f} "
          f"missing {np.isnan(col).sum()}")

# %% [markdown]
# Keep debt ratios in [0, 1], split 75/25 per class, fit on the training part only.

# %%
d = filter_debt_ratio(d)
train, test = stratified_split(d, 0.75, seed=0)
params = fit_preprocessor(train)
z_train = apply_preprocessor(params, train)
print("train means", np.round(z_train.mean(axis=0), 12))
print("train stds ", np.round(z_train.std(axis=0), 12))

# %% [markdown]
# Test rows go through the same fitted transform, so their means drift a little from zero.

# %%
print("test means ", np.round(apply_preprocessor(params, test).mean(axis=0), 3))

# %% [markdown]
# Point-biserial ranking of the standardized attributes against the outcome.

# %%
ranking = rank_features(z_train, train.outcomes)
for f, r in ranking:
    print(f"{f.key:>3} {r:+.3f}")
