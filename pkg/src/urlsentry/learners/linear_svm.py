"""Linear SVM trained with Pegasos-style primal SGD on the hinge loss.

Labels map {0 -> -1, 1 -> +1}; features are z-scored exactly as in the KNN
baseline and a constant-1 column carries the bias. Step t uses learning
rate 1/(lambda*t) on a uniformly drawn training example from the repo PRNG,
so a fixed seed reproduces the weight vector bit for bit. The reported
probability is a sigmoid of the (clamped) margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..corpus import LabeledCorpus
from ..errors import DegenerateCorpus
from ..rng import SplitMix64
from .knn import standardization

DEFAULT_LAMBDA = 1e-4
DEFAULT_EPOCHS = 20
_MARGIN_CLAMP = 30.0


@dataclass
class LinearSvmModel:
    weights: np.ndarray  # (d + 1,), last entry is the bias weight
    means: np.ndarray
    scale: np.ndarray
    lam: float
    epochs: int
    seed: int
    schema_hash: str
    trained_on: str
    algorithm: str = "linear_svm"
    trained_at: str | None = field(default=None, compare=False)

    def margin(self, x: np.ndarray) -> float:
        z = (x - self.means) * self.scale
        return float(np.dot(self.weights[:-1], z) + self.weights[-1])

    def predict_one(self, x: np.ndarray) -> tuple[int, float]:
        m = self.margin(x)
        clamped = max(-_MARGIN_CLAMP, min(_MARGIN_CLAMP, m))
        probability = 1.0 / (1.0 + math.exp(-clamped))
        return (1 if m >= 0.0 else 0), probability

    def hyperparameters(self) -> dict:
        return {"lambda": self.lam, "epochs": self.epochs}


def train_linear_svm(
    train: LabeledCorpus,
    lam: float = DEFAULT_LAMBDA,
    epochs: int = DEFAULT_EPOCHS,
    seed: int = 0,
) -> LinearSvmModel:
    X, y01 = train.matrix(), train.labels()
    n = X.shape[0]
    if n == 0 or len(set(y01.tolist())) < 2:
        raise DegenerateCorpus("linear_svm needs both labels present")

    means, scale = standardization(X)
    Z = np.hstack([(X - means) * scale, np.ones((n, 1))])
    y = np.where(y01 == 1, 1.0, -1.0)

    rng = SplitMix64(seed)
    w = np.zeros(Z.shape[1])
    t = 0
    for _epoch in range(epochs):
        for _step in range(n):
            t += 1
            i = rng.randrange(n)
            eta = 1.0 / (lam * t)
            w *= 1.0 - eta * lam
            if y[i] * float(np.dot(w, Z[i])) < 1.0:
                w += eta * y[i] * Z[i]

    return LinearSvmModel(
        weights=w,
        means=means,
        scale=scale,
        lam=lam,
        epochs=epochs,
        seed=seed,
        schema_hash=train.schema_hash,
        trained_on=train.source_name,
    )
