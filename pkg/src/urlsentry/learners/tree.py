"""CART-style binary decision tree with the Gini criterion.

Splitting is greedy best-gain over candidate thresholds placed at midpoints
between consecutive distinct sorted values of each candidate feature.
Tie-breaking is fully deterministic: lowest feature index, then lowest
threshold. Recursion stops on purity, the depth limit, min_samples_split,
or when no candidate split has positive gain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..corpus import LabeledCorpus
from ..errors import EmptyCorpus, EmptyPartition
from ..rng import SplitMix64


def gini_impurity(count0: int, count1: int) -> float:
    """1 - p0^2 - p1^2 over the two label proportions; in [0, 0.5]."""
    n = count0 + count1
    if n <= 0:
        raise EmptyPartition("gini_impurity of an empty partition")
    p0 = count0 / n
    p1 = count1 / n
    return 1.0 - p0 * p0 - p1 * p1


@dataclass
class TreeNode:
    # Internal nodes carry (feature_index, threshold, left, right);
    # leaves carry (label, count0, count1). x <= threshold goes left.
    feature_index: int = -1
    threshold: float = 0.0
    left: Optional["TreeNode"] = None
    right: Optional["TreeNode"] = None
    label: int = 0
    count0: int = 0
    count1: int = 0

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def node_count(self) -> int:
        if self.is_leaf:
            return 1
        return 1 + self.left.node_count() + self.right.node_count()


@dataclass(frozen=True)
class TreeParams:
    max_depth: int | None = None  # None = unbounded
    min_samples_split: int = 2
    mtry: int | None = None  # None = consider every feature


def _leaf(count0: int, count1: int) -> TreeNode:
    return TreeNode(label=1 if count1 >= count0 else 0, count0=count0, count1=count1)


def _best_split(
    X: np.ndarray, y: np.ndarray, idx: np.ndarray, candidates,
) -> tuple[int, float, float] | None:
    """Best (feature, threshold, gain) among candidate features, or None.

    Candidate thresholds are midpoints between consecutive distinct sorted
    values. Ties resolve to the lowest feature index, then lowest threshold
    (candidates arrive in ascending index order; argmax picks the first,
    i.e. lowest, threshold).
    """
    n = idx.size
    total1 = int(y[idx].sum())
    total0 = n - total1
    parent = gini_impurity(total0, total1)

    best_gain = 0.0
    best: tuple[int, float, float] | None = None
    for f in candidates:
        col = X[idx, f]
        order = np.argsort(col, kind="stable")
        v = col[order]
        ones = np.cumsum(y[idx][order])
        ks = np.nonzero(v[:-1] < v[1:])[0]
        if ks.size == 0:
            continue
        nl = (ks + 1).astype(np.float64)
        nr = n - nl
        ones_l = ones[ks].astype(np.float64)
        zeros_l = nl - ones_l
        ones_r = total1 - ones_l
        zeros_r = nr - ones_r
        # p0 term first, matching gini_impurity(): keeps gain floats
        # bit-identical with any enumeration using the same convention.
        gini_l = 1.0 - (zeros_l / nl) ** 2 - (ones_l / nl) ** 2
        gini_r = 1.0 - (zeros_r / nr) ** 2 - (ones_r / nr) ** 2
        gains = parent - ((nl / n) * gini_l + (nr / n) * gini_r)
        j = int(np.argmax(gains))
        if gains[j] > best_gain:
            a, b = v[ks[j]], v[ks[j] + 1]
            thr = (a + b) / 2.0
            if thr >= b:  # adjacent floats: keep the partition intact
                thr = a
            best_gain = float(gains[j])
            best = (int(f), float(thr), best_gain)
    return best


def _grow(
    X: np.ndarray,
    y: np.ndarray,
    idx: np.ndarray,
    depth: int,
    params: TreeParams,
    rng: SplitMix64,
) -> TreeNode:
    n = idx.size
    count1 = int(y[idx].sum())
    count0 = n - count1
    if (
        count0 == 0
        or count1 == 0
        or n < params.min_samples_split
        or (params.max_depth is not None and depth >= params.max_depth)
    ):
        return _leaf(count0, count1)

    d = X.shape[1]
    if params.mtry is None or params.mtry >= d:
        candidates = range(d)
    else:
        candidates = sorted(rng.sample_indices(d, params.mtry))

    found = _best_split(X, y, idx, candidates)
    if found is None:
        return _leaf(count0, count1)
    f, thr, _gain = found
    mask = X[idx, f] <= thr
    left = _grow(X, y, idx[mask], depth + 1, params, rng)
    right = _grow(X, y, idx[~mask], depth + 1, params, rng)
    return TreeNode(feature_index=f, threshold=thr, left=left, right=right)


def train_tree_arrays(
    X: np.ndarray, y: np.ndarray, params: TreeParams, rng: SplitMix64,
    idx: np.ndarray | None = None,
) -> TreeNode:
    if X.shape[0] == 0:
        raise EmptyCorpus("cannot train a tree on an empty corpus")
    if idx is None:
        idx = np.arange(X.shape[0])
    return _grow(X, y, idx, 0, params, rng)


def predict_node(node: TreeNode, x: np.ndarray) -> tuple[int, float]:
    """Walk to a leaf; probability is the leaf's phishing fraction."""
    while not node.is_leaf:
        node = node.left if x[node.feature_index] <= node.threshold else node.right
    return node.label, node.count1 / (node.count0 + node.count1)


@dataclass
class TreeModel:
    """Standalone single-tree learner sharing the common predict contract."""

    root: TreeNode
    params: TreeParams
    schema_hash: str
    trained_on: str
    seed: int = 0
    algorithm: str = "tree"
    trained_at: str | None = field(default=None, compare=False)

    def predict_one(self, x: np.ndarray) -> tuple[int, float]:
        return predict_node(self.root, x)

    def hyperparameters(self) -> dict:
        return {
            "max_depth": self.params.max_depth,
            "min_samples_split": self.params.min_samples_split,
            "mtry": self.params.mtry,
        }


def train_tree(
    train: LabeledCorpus,
    params: TreeParams = TreeParams(),
    rng: SplitMix64 | None = None,
    seed: int = 0,
) -> TreeModel:
    if rng is None:
        rng = SplitMix64(seed)
    root = train_tree_arrays(train.matrix(), train.labels(), params, rng)
    return TreeModel(
        root=root,
        params=params,
        schema_hash=train.schema_hash,
        trained_on=train.source_name,
        seed=seed,
    )
