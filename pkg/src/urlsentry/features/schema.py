"""The fixed 42-feature lexical schema (v1).

The schema is the contract between extraction, training, model files and
the verdict service: everything checks the 64-bit schema digest before
trusting a vector. Names are ordered; the order is part of the hash.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..digest import digest64

FEATURE_NAMES_V1: tuple[str, ...] = (
    "url_length",
    "hostname_length",
    "path_length",
    "query_length",
    "count_dots",
    "count_hyphens",
    "count_at",
    "count_question_marks",
    "count_ampersands",
    "count_equals",
    "count_underscores",
    "count_tildes",
    "count_percents",
    "count_slashes",
    "count_asterisks",
    "count_colons",
    "count_commas",
    "count_semicolons",
    "count_dollars",
    "count_whitespace",
    "count_www",
    "count_com",
    "count_double_slash",
    "count_http_in_path",
    "https_in_hostname",
    "digit_count_url",
    "digit_count_hostname",
    "digit_ratio_url",
    "digit_ratio_hostname",
    "has_ip",
    "has_punycode",
    "has_port",
    "tld_length",
    "subdomain_count",
    "is_https_scheme",
    "hostname_entropy",
    "has_suspicious_word",
    "path_segment_count",
    "longest_hostname_token",
    "mean_hostname_token_length",
    "is_shortener",
    "registered_domain_has_hyphen",
)

N_FEATURES = 42

# Features whose values are exactly 0.0 or 1.0, and those confined to [0, 1].
BINARY_FEATURES = frozenset({
    "https_in_hostname", "has_ip", "has_punycode", "has_port",
    "is_https_scheme", "has_suspicious_word", "is_shortener",
    "registered_domain_has_hyphen",
})
RATIO_FEATURES = frozenset({"digit_ratio_url", "digit_ratio_hostname"})


@dataclass(frozen=True)
class FeatureSchema:
    names: tuple[str, ...]
    version: int
    hash: str = field(init=False)

    def __post_init__(self):
        if len(self.names) != N_FEATURES:
            raise ValueError(f"schema must have {N_FEATURES} names, got {len(self.names)}")
        if len(set(self.names)) != len(self.names):
            raise ValueError("schema names must be unique")
        digest = digest64("\n".join(self.names) + f"\n{self.version}")
        object.__setattr__(self, "hash", digest)

    def index_of(self, name: str) -> int:
        return self.names.index(name)


CANONICAL_SCHEMA = FeatureSchema(names=FEATURE_NAMES_V1, version=1)
