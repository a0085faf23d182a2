"""Random forest built from the CART trees in tree.py.

Each tree trains on a bootstrap sample (size = |train|, drawn with
replacement) from its own PRNG stream derived from (seed, tree index), with
per-node feature subsampling of size mtry. The derived streams make the
model independent of training order, so per-tree parallelism could never
change the result; trees are assembled in index order regardless.

Prediction: probability = fraction of trees voting phishing; the label is
phishing exactly when that fraction reaches 0.5 (a tied vote fails safe).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..corpus import LabeledCorpus
from ..errors import EmptyCorpus
from ..features import N_FEATURES
from ..rng import SplitMix64, derive_seed
from .tree import TreeNode, TreeParams, predict_node, train_tree_arrays

DEFAULT_N_ESTIMATORS = 100
DEFAULT_MTRY = math.floor(math.sqrt(N_FEATURES))  # 6


@dataclass(frozen=True)
class ForestParams:
    n_estimators: int = DEFAULT_N_ESTIMATORS
    mtry: int | None = DEFAULT_MTRY  # None = all features
    max_depth: int | None = None
    min_samples_split: int = 2
    bootstrap: bool = True

    def __post_init__(self):
        if self.n_estimators < 1:
            raise ValueError("n_estimators must be >= 1")
        if self.mtry is not None and not 1 <= self.mtry <= N_FEATURES:
            raise ValueError(f"mtry must be in [1, {N_FEATURES}]")


@dataclass
class ForestModel:
    trees: list[TreeNode]
    n_estimators: int
    mtry: int
    seed: int
    schema_hash: str
    trained_on: str
    params: ForestParams = field(default_factory=ForestParams)
    algorithm: str = "forest"
    trained_at: str | None = field(default=None, compare=False)

    def predict_one(self, x: np.ndarray) -> tuple[int, float]:
        votes = sum(predict_node(t, x)[0] for t in self.trees)
        probability = votes / len(self.trees)
        return (1 if probability >= 0.5 else 0), probability

    def hyperparameters(self) -> dict:
        return {
            "n_estimators": self.params.n_estimators,
            "mtry": self.params.mtry,
            "max_depth": self.params.max_depth,
            "min_samples_split": self.params.min_samples_split,
            "bootstrap": self.params.bootstrap,
        }


def train_forest(
    train: LabeledCorpus,
    params: ForestParams = ForestParams(),
    seed: int = 0,
) -> ForestModel:
    X, y = train.matrix(), train.labels()
    n = X.shape[0]
    if n == 0:
        raise EmptyCorpus("cannot train a forest on an empty corpus")

    tree_params = TreeParams(
        max_depth=params.max_depth,
        min_samples_split=params.min_samples_split,
        mtry=params.mtry,
    )
    trees: list[TreeNode] = []
    for t in range(params.n_estimators):
        rng = SplitMix64(derive_seed(seed, t))
        if params.bootstrap:
            idx = np.array([rng.randrange(n) for _ in range(n)], dtype=np.intp)
        else:
            idx = np.arange(n)
        trees.append(train_tree_arrays(X, y, tree_params, rng, idx=idx))

    return ForestModel(
        trees=trees,
        n_estimators=params.n_estimators,
        mtry=params.mtry if params.mtry is not None else X.shape[1],
        seed=seed,
        schema_hash=train.schema_hash,
        trained_on=train.source_name,
        params=params,
    )
