"""Lexical feature extraction: one URL string in, 42 floats out.

Pure and deterministic: extracting the same string twice yields bit-identical
vectors. No network, no DNS, no page content — measurements come from the
string alone.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass

import numpy as np

from ..errors import SchemaMismatch
from .parsing import (
    SHORTENER_DOMAINS,
    SUSPICIOUS_WORDS,
    ParsedUrl,
    ensure_scheme,
    is_ipv4,
    parse_url,
)
from .schema import CANONICAL_SCHEMA, FeatureSchema

_HOST_TOKEN_SPLIT = re.compile(r"[.-]")

# (feature name, character) pairs for the single-character count block.
_CHAR_COUNTS = (
    ("count_dots", "."),
    ("count_hyphens", "-"),
    ("count_at", "@"),
    ("count_question_marks", "?"),
    ("count_ampersands", "&"),
    ("count_equals", "="),
    ("count_underscores", "_"),
    ("count_tildes", "~"),
    ("count_percents", "%"),
    ("count_slashes", "/"),
    ("count_asterisks", "*"),
    ("count_colons", ":"),
    ("count_commas", ","),
    ("count_semicolons", ";"),
    ("count_dollars", "$"),
)


@dataclass(frozen=True)
class FeatureVector:
    values: np.ndarray  # shape (42,), float64, finite
    schema_hash: str

    def as_dict(self, schema: FeatureSchema = CANONICAL_SCHEMA) -> dict[str, float]:
        return dict(zip(schema.names, self.values.tolist()))


def hostname_entropy(hostname: str) -> float:
    """Shannon entropy (base 2) of the hostname's character distribution.

    Computed over the raw characters including dots. 0.0 for a one-symbol
    alphabet; at most log2(alphabet size).
    """
    n = len(hostname)
    counts = Counter(hostname)
    ent = 0.0
    for c in counts.values():
        p = c / n
        ent -= p * math.log2(p)
    return ent if ent > 0.0 else 0.0


def _hostname_tokens(hostname: str) -> list[str]:
    return [t for t in _HOST_TOKEN_SPLIT.split(hostname) if t]


def extract_features(raw: str, schema: FeatureSchema | None = None) -> FeatureVector:
    """Extract the canonical 42-value vector for one URL string.

    Counts over the full URL use the effective string (scheme defaulted to
    http when absent); substring-token counts are case-insensitive.
    Hostname features come from the lowercased parsed hostname.
    """
    if schema is None:
        schema = CANONICAL_SCHEMA
    if schema.hash != CANONICAL_SCHEMA.hash:
        raise SchemaMismatch(f"unknown feature schema {schema.hash}")

    parsed: ParsedUrl = parse_url(raw)
    url = ensure_scheme(raw)
    lower = url.lower()
    host = parsed.hostname
    path_query = parsed.path + ("?" + parsed.query if parsed.query else "")

    after_scheme = lower.split("://", 1)[1] if "://" in lower else lower
    digits_url = sum(ch.isdigit() for ch in url)
    digits_host = sum(ch.isdigit() for ch in host)
    tokens = _hostname_tokens(host)

    values: dict[str, float] = {
        "url_length": float(len(url)),
        "hostname_length": float(len(host)),
        "path_length": float(len(parsed.path)),
        "query_length": float(len(parsed.query)),
        "count_whitespace": float(sum(ch.isspace() for ch in url) + lower.count("%20")),
        "count_www": float(lower.count("www")),
        "count_com": float(lower.count("com")),
        "count_double_slash": float(after_scheme.count("//")),
        "count_http_in_path": float(path_query.lower().count("http")),
        "https_in_hostname": 1.0 if "https" in host else 0.0,
        "digit_count_url": float(digits_url),
        "digit_count_hostname": float(digits_host),
        "digit_ratio_url": digits_url / len(url),
        "digit_ratio_hostname": digits_host / len(host),
        "has_ip": 1.0 if is_ipv4(host) else 0.0,
        "has_punycode": 1.0 if "xn--" in host else 0.0,
        "has_port": 1.0 if parsed.port is not None else 0.0,
        "tld_length": float(len(parsed.tld)),
        "subdomain_count": float(len(parsed.subdomain_labels)),
        "is_https_scheme": 1.0 if parsed.scheme == "https" else 0.0,
        "hostname_entropy": hostname_entropy(host),
        "has_suspicious_word": 1.0 if any(w in lower for w in SUSPICIOUS_WORDS) else 0.0,
        "path_segment_count": float(len([s for s in parsed.path.split("/") if s])),
        "longest_hostname_token": float(max((len(t) for t in tokens), default=0)),
        "mean_hostname_token_length": (
            sum(len(t) for t in tokens) / len(tokens) if tokens else 0.0
        ),
        "is_shortener": (
            1.0 if parsed.registered_domain in SHORTENER_DOMAINS or host in SHORTENER_DOMAINS
            else 0.0
        ),
        "registered_domain_has_hyphen": 1.0 if "-" in parsed.registered_domain else 0.0,
    }
    for name, ch in _CHAR_COUNTS:
        values[name] = float(url.count(ch))

    vec = np.array([values[name] for name in schema.names], dtype=np.float64)
    return FeatureVector(values=vec, schema_hash=schema.hash)
