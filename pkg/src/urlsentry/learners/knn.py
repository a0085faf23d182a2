"""k-nearest-neighbors baseline.

Features are z-scored with the training means/stds; a zero-std feature is
zeroed out of the distance entirely (for queries too). Euclidean distance,
majority vote over the k nearest; equal distances resolve to the lower
training index, and a tied vote falls back to the single nearest
neighbor's label.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..corpus import LabeledCorpus
from ..errors import KTooLarge

DEFAULT_K = 5


@dataclass
class KnnModel:
    k: int
    points: np.ndarray   # (n, d), already standardized
    labels: np.ndarray   # (n,)
    means: np.ndarray    # (d,)
    scale: np.ndarray    # (d,) 1/std, 0 where std == 0
    standardize: bool
    schema_hash: str
    trained_on: str
    seed: int = 0
    algorithm: str = "knn"
    trained_at: str | None = field(default=None, compare=False)

    def predict_one(self, x: np.ndarray) -> tuple[int, float]:
        z = (x - self.means) * self.scale
        d2 = np.sum((self.points - z) ** 2, axis=1)
        order = np.argsort(d2, kind="stable")[: self.k]
        votes1 = int(self.labels[order].sum())
        probability = votes1 / self.k
        if 2 * votes1 == self.k:  # tied vote: defer to the nearest point
            label = int(self.labels[order[0]])
        else:
            label = 1 if votes1 * 2 > self.k else 0
        return label, probability

    def hyperparameters(self) -> dict:
        return {"k": self.k, "standardize": self.standardize}


def standardization(X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(means, scale) where scale = 1/std and 0 for constant features."""
    means = X.mean(axis=0)
    stds = X.std(axis=0)
    scale = np.where(stds > 0.0, 1.0 / np.where(stds > 0.0, stds, 1.0), 0.0)
    return means, scale


def train_knn(
    train: LabeledCorpus,
    k: int = DEFAULT_K,
    standardize: bool = True,
    seed: int = 0,
) -> KnnModel:
    X, y = train.matrix(), train.labels()
    n = X.shape[0]
    if k < 1 or k > n:
        raise KTooLarge(f"k={k} but corpus has {n} records")
    if standardize:
        means, scale = standardization(X)
    else:
        means = np.zeros(X.shape[1])
        scale = np.ones(X.shape[1])
    return KnnModel(
        k=k,
        points=(X - means) * scale,
        labels=y.copy(),
        means=means,
        scale=scale,
        standardize=standardize,
        schema_hash=train.schema_hash,
        trained_on=train.source_name,
        seed=seed,
    )
