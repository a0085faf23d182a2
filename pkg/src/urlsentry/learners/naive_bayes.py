"""Gaussian naive Bayes baseline.

Per-label, per-feature means and variances; variances are floored at
var_smoothing times the largest per-feature variance so zero-variance
features never produce NaNs. Prediction is argmax of log-likelihood plus
log-prior, with the phishing probability recovered by normalizing the two
joint log densities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..corpus import LabeledCorpus
from ..errors import DegenerateCorpus

DEFAULT_VAR_SMOOTHING = 1e-9


@dataclass
class GaussianNBModel:
    log_prior: np.ndarray  # (2,)
    means: np.ndarray      # (2, d)
    variances: np.ndarray  # (2, d), floored
    var_smoothing: float
    schema_hash: str
    trained_on: str
    seed: int = 0
    algorithm: str = "gaussian_nb"
    trained_at: str | None = field(default=None, compare=False)

    def predict_one(self, x: np.ndarray) -> tuple[int, float]:
        log_joint = self.log_prior - 0.5 * np.sum(
            np.log(2.0 * math.pi * self.variances)
            + (x - self.means) ** 2 / self.variances,
            axis=1,
        )
        m = float(np.max(log_joint))
        w = np.exp(log_joint - m)
        p1 = float(w[1] / (w[0] + w[1]))
        label = 1 if log_joint[1] >= log_joint[0] else 0
        return label, p1

    def hyperparameters(self) -> dict:
        return {"var_smoothing": self.var_smoothing}


def train_gaussian_nb(
    train: LabeledCorpus,
    var_smoothing: float = DEFAULT_VAR_SMOOTHING,
    seed: int = 0,
) -> GaussianNBModel:
    X, y = train.matrix(), train.labels()
    n = X.shape[0]
    if n == 0 or len(set(y.tolist())) < 2:
        raise DegenerateCorpus("gaussian_nb needs both labels present")

    means = np.stack([X[y == c].mean(axis=0) for c in (0, 1)])
    variances = np.stack([X[y == c].var(axis=0) for c in (0, 1)])
    max_var = float(X.var(axis=0).max())
    floor = var_smoothing * (max_var if max_var > 0.0 else 1.0)
    variances = np.maximum(variances, floor)
    priors = np.array([(y == 0).sum() / n, (y == 1).sum() / n])

    return GaussianNBModel(
        log_prior=np.log(priors),
        means=means,
        variances=variances,
        var_smoothing=var_smoothing,
        schema_hash=train.schema_hash,
        trained_on=train.source_name,
        seed=seed,
    )
