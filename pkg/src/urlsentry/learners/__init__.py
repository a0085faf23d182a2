"""Five supervised learners behind one train/predict contract.

Every trained model exposes ``predict_one(x) -> (label, probability)``
where probability is the model's estimate that the URL is phishing, plus
``algorithm``, ``schema_hash`` and ``hyperparameters()``. Models are
immutable once trained; prediction is pure and reentrant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..corpus import LabeledCorpus
from ..errors import SchemaMismatch, UnknownHyperparameter
from ..features import FeatureVector
from .forest import (
    DEFAULT_MTRY,
    DEFAULT_N_ESTIMATORS,
    ForestModel,
    ForestParams,
    train_forest,
)
from .knn import DEFAULT_K, KnnModel, train_knn
from .linear_svm import (
    DEFAULT_EPOCHS,
    DEFAULT_LAMBDA,
    LinearSvmModel,
    train_linear_svm,
)
from .naive_bayes import DEFAULT_VAR_SMOOTHING, GaussianNBModel, train_gaussian_nb
from .tree import (
    TreeModel,
    TreeNode,
    TreeParams,
    gini_impurity,
    train_tree,
)

ALGORITHMS = ("forest", "tree", "gaussian_nb", "knn", "linear_svm")

_HYPERPARAMETERS = {
    "forest": {"n_estimators", "mtry", "max_depth", "min_samples_split", "bootstrap"},
    "tree": {"max_depth", "min_samples_split", "mtry"},
    "gaussian_nb": {"var_smoothing"},
    "knn": {"k", "standardize"},
    "linear_svm": {"lambda", "epochs"},
}


@dataclass(frozen=True)
class LearnerConfig:
    algorithm: str
    hyperparameters: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(
                f"unknown algorithm {self.algorithm!r}; expected one of {ALGORITHMS}"
            )
        unknown = set(self.hyperparameters) - _HYPERPARAMETERS[self.algorithm]
        if unknown:
            raise UnknownHyperparameter(
                f"{self.algorithm} does not accept {sorted(unknown)}"
            )


def train_learner(config: LearnerConfig, train: LabeledCorpus):
    """Train the learner described by config on the given corpus."""
    hp = config.hyperparameters
    if config.algorithm == "forest":
        params = ForestParams(
            n_estimators=hp.get("n_estimators", DEFAULT_N_ESTIMATORS),
            mtry=hp.get("mtry", DEFAULT_MTRY),
            max_depth=hp.get("max_depth"),
            min_samples_split=hp.get("min_samples_split", 2),
            bootstrap=hp.get("bootstrap", True),
        )
        return train_forest(train, params, seed=config.seed)
    if config.algorithm == "tree":
        params = TreeParams(
            max_depth=hp.get("max_depth"),
            min_samples_split=hp.get("min_samples_split", 2),
            mtry=hp.get("mtry"),
        )
        return train_tree(train, params, seed=config.seed)
    if config.algorithm == "gaussian_nb":
        return train_gaussian_nb(
            train, var_smoothing=hp.get("var_smoothing", DEFAULT_VAR_SMOOTHING),
            seed=config.seed,
        )
    if config.algorithm == "knn":
        return train_knn(
            train, k=hp.get("k", DEFAULT_K),
            standardize=hp.get("standardize", True), seed=config.seed,
        )
    return train_linear_svm(
        train, lam=hp.get("lambda", DEFAULT_LAMBDA),
        epochs=hp.get("epochs", DEFAULT_EPOCHS), seed=config.seed,
    )


def predict(model, features: FeatureVector) -> tuple[int, float]:
    """(label, phishing probability) for one feature vector, schema-checked."""
    if features.schema_hash != model.schema_hash:
        raise SchemaMismatch(
            f"vector schema {features.schema_hash} != model schema {model.schema_hash}"
        )
    return model.predict_one(features.values)


__all__ = [
    "ALGORITHMS",
    "DEFAULT_K",
    "DEFAULT_MTRY",
    "DEFAULT_N_ESTIMATORS",
    "ForestModel",
    "ForestParams",
    "GaussianNBModel",
    "KnnModel",
    "LearnerConfig",
    "LinearSvmModel",
    "TreeModel",
    "TreeNode",
    "TreeParams",
    "gini_impurity",
    "predict",
    "train_forest",
    "train_gaussian_nb",
    "train_knn",
    "train_learner",
    "train_linear_svm",
    "train_tree",
]
