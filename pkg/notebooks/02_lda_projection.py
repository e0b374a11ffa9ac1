# %% [markdown]
# # Fisher projection
#
# Fit the two-class discriminant on the top four attributes and compare the
# projected class distributions.

# %%
import numpy as np

from creditrisk import GeneratorConfig, generate_synthetic
from creditrisk.data import filter_debt_ratio, stratified_split
from creditrisk.lda import classify_lda, fit_lda, project
from creditrisk.preprocess import apply_preprocessor, fit_preprocessor

d = filter_debt_ratio(generate_synthetic(GeneratorConfig(n=7778, seed=0)))
train, test = stratified_split(d, 0.75, seed=0)
pre = fit_preprocessor(train)
x_train = apply_preprocessor(pre, train)[:, :4]
x_test = apply_preprocessor(pre, test)[:, :4]

lda = fit_lda(x_train, train.outcomes)
print("direction", np.round(lda.w, 4))
print("priors", lda.priors, "threshold", round(lda.threshold, 4), "ridge", lda.ridge)

# %% [markdown]
# Projected scores per class on the test split.

# %%
z = project(lda, x_test)
for label in (0, 1):
    s = z[test.outcomes == label]
    print(f"class {label}: mean {s.mean():+.3f} sd {s.std():.3f}")

# %% [markdown]
# A crude text histogram of the two projected classes.

# %%
edges = np.linspace(z.min(), z.max(), 21)
h0, _ = np.histogram(z[test.outcomes == 0], edges)
h1, _ = np.histogram(z[test.outcomes == 1], edges)
scale = max(h0.max(), h1.max()) / 40
for lo, a, b in zip(edges, h0, h1):
    print(f"{lo:+6.2f} {'0' * int(a / scale):<40} {'1' * int(b / scale)}")

# %%
acc = np.mean(classify_lda(lda, x_test) == test.outcomes)
print("LDA rule test accuracy", round(acc, 4))
