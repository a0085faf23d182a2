"""Labeled URL corpora: CSV ingestion, featurization, deterministic splits.

Two input layouts are supported:

* ``csv_labeled_urls`` — columns ``url,label``; features are extracted here.
* ``csv_prefeaturized`` — the 42 schema columns plus ``label`` (and an
  optional ``url``), for externally published feature datasets.

Labels: 1 = phishing, 0 = legitimate. Rows that fail to parse are skipped,
recorded, and reported — never silently dropped.
"""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateCorpus,
    EmptyCorpus,
    MissingColumn,
    MissingFile,
    UrlSentryError,
)
from .features import CANONICAL_SCHEMA, FeatureVector, extract_features
from .rng import SplitMix64

CSV_LABELED_URLS = "csv_labeled_urls"
CSV_PREFEATURIZED = "csv_prefeaturized"


@dataclass(frozen=True)
class LabeledRecord:
    raw_url: str
    features: FeatureVector
    label: int  # 1 phishing, 0 legitimate


@dataclass(frozen=True)
class RowError:
    line: int  # 1-based line number in the source file (header = line 1)
    url: str
    reason: str


@dataclass
class LabeledCorpus:
    records: list[LabeledRecord]
    schema_hash: str
    source_name: str
    skipped: tuple[RowError, ...] = ()
    _matrix: np.ndarray | None = field(default=None, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.records)

    def matrix(self) -> np.ndarray:
        """(N, 42) float64 feature matrix, cached."""
        if self._matrix is None:
            self._matrix = np.stack([r.features.values for r in self.records])
        return self._matrix

    def labels(self) -> np.ndarray:
        return np.array([r.label for r in self.records], dtype=np.int64)

    def subset(self, indices: list[int], suffix: str) -> "LabeledCorpus":
        return LabeledCorpus(
            records=[self.records[i] for i in indices],
            schema_hash=self.schema_hash,
            source_name=self.source_name + suffix,
        )


@dataclass(frozen=True)
class SplitConfig:
    test_fraction: float = 0.3
    seed: int = 0
    stratified: bool = True

    def __post_init__(self):
        if not 0.0 < self.test_fraction < 1.0:
            raise ValueError("test_fraction must be in (0, 1)")


def from_urls(pairs: list[tuple[str, int]], source_name: str = "memory") -> LabeledCorpus:
    """Featurize (url, label) pairs already in memory. Unparsable rows skipped."""
    records, skipped = [], []
    for i, (url, label) in enumerate(pairs):
        try:
            records.append(LabeledRecord(url, extract_features(url), label))
        except UrlSentryError as exc:
            skipped.append(RowError(line=i + 1, url=url, reason=str(exc)))
    return LabeledCorpus(records, CANONICAL_SCHEMA.hash, source_name, tuple(skipped))


def load_corpus(
    path,
    format: str = CSV_LABELED_URLS,
    dedupe: bool = False,
) -> LabeledCorpus:
    """Load a labeled corpus from a CSV file (UTF-8, header row, RFC 4180)."""
    if not os.path.exists(path):
        raise MissingFile(f"corpus file not found: {path}")
    if format not in (CSV_LABELED_URLS, CSV_PREFEATURIZED):
        raise ValueError(f"unknown corpus format {format!r}")

    records: list[LabeledRecord] = []
    skipped: list[RowError] = []
    seen: set[str] = set()

    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        if format == CSV_LABELED_URLS:
            missing = [c for c in ("url", "label") if c not in header]
        else:
            missing = [c for c in (*CANONICAL_SCHEMA.names, "label") if c not in header]
        if missing:
            raise MissingColumn(f"{path}: missing column(s) {', '.join(missing)}")

        for lineno, row in enumerate(reader, start=2):
            url = (row.get("url") or "").strip()
            label_raw = (row.get("label") or "").strip()
            if label_raw not in ("0", "1"):
                skipped.append(RowError(lineno, url, f"invalid label {label_raw!r}"))
                continue
            label = int(label_raw)
            if dedupe and url:
                if url in seen:
                    continue
                seen.add(url)
            if format == CSV_LABELED_URLS:
                try:
                    features = extract_features(url)
                except UrlSentryError as exc:
                    skipped.append(RowError(lineno, url, str(exc)))
                    continue
            else:
                try:
                    vals = np.array(
                        [float(row[name]) for name in CANONICAL_SCHEMA.names],
                        dtype=np.float64,
                    )
                except ValueError as exc:
                    skipped.append(RowError(lineno, url, f"bad feature value: {exc}"))
                    continue
                if not np.all(np.isfinite(vals)):
                    skipped.append(RowError(lineno, url, "non-finite feature value"))
                    continue
                features = FeatureVector(values=vals, schema_hash=CANONICAL_SCHEMA.hash)
            records.append(LabeledRecord(url, features, label))

    if not records:
        raise EmptyCorpus(f"{path}: no usable records")
    source = os.path.basename(str(path))
    return LabeledCorpus(records, CANONICAL_SCHEMA.hash, source, tuple(skipped))


def class_distribution(corpus: LabeledCorpus) -> tuple[int, int]:
    """(n_legitimate, n_phishing); the two counts sum to len(corpus)."""
    n_phish = sum(r.label for r in corpus.records)
    return len(corpus.records) - n_phish, n_phish


def _allocate_per_label(counts: dict[int, int], test_fraction: float, total_target: int) -> dict[int, int]:
    """Largest-remainder allocation of the test quota across labels."""
    quotas = {lbl: test_fraction * n for lbl, n in counts.items()}
    alloc = {lbl: math.floor(q) for lbl, q in quotas.items()}
    leftover = total_target - sum(alloc.values())
    order = sorted(counts, key=lambda lbl: (-(quotas[lbl] - alloc[lbl]), lbl))
    for lbl in order:
        if leftover <= 0:
            break
        alloc[lbl] += 1
        leftover -= 1
    for lbl, n in counts.items():
        alloc[lbl] = min(alloc[lbl], max(n - 1, 0))  # never drain a label from train
    return alloc


def split(corpus: LabeledCorpus, cfg: SplitConfig) -> tuple[LabeledCorpus, LabeledCorpus]:
    """Deterministic (train, test) partition; stratified by default."""
    n = len(corpus)
    if n < 2:
        raise DegenerateCorpus("need at least 2 records to split")
    rng = SplitMix64(cfg.seed)
    target = round(cfg.test_fraction * n)
    target = min(max(target, 1), n - 1)

    if cfg.stratified:
        by_label: dict[int, list[int]] = {}
        for i, rec in enumerate(corpus.records):
            by_label.setdefault(rec.label, []).append(i)
        if set(by_label) != {0, 1}:
            raise DegenerateCorpus(
                f"stratified split needs both labels, got {sorted(by_label)}"
            )
        counts = {lbl: len(ix) for lbl, ix in by_label.items()}
        alloc = _allocate_per_label(counts, cfg.test_fraction, target)
        test_idx: list[int] = []
        for lbl in sorted(by_label):
            indices = list(by_label[lbl])
            rng.shuffle(indices)
            test_idx.extend(indices[: alloc[lbl]])
    else:
        indices = list(range(n))
        rng.shuffle(indices)
        test_idx = indices[:target]

    test_set = set(test_idx)
    train_idx = [i for i in range(n) if i not in test_set]
    return corpus.subset(train_idx, "/train"), corpus.subset(sorted(test_idx), "/test")
