"""URL lexical analysis: parsing plus the fixed 42-feature vector."""

from .extract import FeatureVector, extract_features, hostname_entropy
from .parsing import (
    PUBLIC_SUFFIXES,
    SHORTENER_DOMAINS,
    SUSPICIOUS_WORDS,
    ParsedUrl,
    is_ipv4,
    parse_url,
    split_registered_domain,
)
from .schema import (
    BINARY_FEATURES,
    CANONICAL_SCHEMA,
    FEATURE_NAMES_V1,
    N_FEATURES,
    RATIO_FEATURES,
    FeatureSchema,
)

__all__ = [
    "BINARY_FEATURES",
    "CANONICAL_SCHEMA",
    "FEATURE_NAMES_V1",
    "FeatureSchema",
    "FeatureVector",
    "N_FEATURES",
    "ParsedUrl",
    "PUBLIC_SUFFIXES",
    "RATIO_FEATURES",
    "SHORTENER_DOMAINS",
    "SUSPICIOUS_WORDS",
    "extract_features",
    "hostname_entropy",
    "is_ipv4",
    "parse_url",
    "split_registered_domain",
]
