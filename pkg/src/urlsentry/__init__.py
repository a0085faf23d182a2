"""urlsentry: real-time phishing-URL detection.

Lexical feature extraction, five from-scratch learners (random forest
primary), a portable model format, an evaluation harness with a zero-day
replay, and an HTTP verdict service for the companion browser extension.
"""

__version__ = "0.1.0"

from .corpus import (
    LabeledCorpus,
    LabeledRecord,
    SplitConfig,
    class_distribution,
    load_corpus,
    split,
)
from .features import (
    CANONICAL_SCHEMA,
    FeatureSchema,
    FeatureVector,
    ParsedUrl,
    extract_features,
    hostname_entropy,
    parse_url,
)
from .learners import LearnerConfig, predict, train_learner
from .model_store import load_model, save_model

__all__ = [
    "CANONICAL_SCHEMA",
    "FeatureSchema",
    "FeatureVector",
    "LabeledCorpus",
    "LabeledRecord",
    "LearnerConfig",
    "ParsedUrl",
    "SplitConfig",
    "class_distribution",
    "extract_features",
    "hostname_entropy",
    "load_corpus",
    "load_model",
    "parse_url",
    "predict",
    "save_model",
    "split",
    "train_learner",
    "__version__",
]
