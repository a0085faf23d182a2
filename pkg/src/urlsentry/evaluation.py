"""Evaluation harness: confusion matrices, headline metrics, cross-algorithm
comparison, and the rolling zero-day replay.

Positive = phishing = label 1 throughout. Report files are data, not plots:
metrics.json, comparison.csv, zeroday_daily.csv, zeroday_summary.json.
"""

from __future__ import annotations

import csv
import datetime as dt
import json
import os
import urllib.request
from dataclasses import dataclass, field

from .corpus import LabeledCorpus, SplitConfig, split
from .errors import (
    EmptyCorpus,
    MalformedFeedLine,
    MissingFile,
    NetworkUnavailable,
    SchemaMismatch,
    UrlSentryError,
)
from .features import extract_features
from .learners import LearnerConfig, train_learner


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    tn: int
    fp: int
    fn: int

    @property
    def total(self) -> int:
        return self.tp + self.tn + self.fp + self.fn

    @property
    def accuracy(self) -> float:
        return (self.tp + self.tn) / self.total

    @property
    def precision(self) -> float:
        return self.tp / (self.tp + self.fp) if self.tp + self.fp else 0.0

    @property
    def recall(self) -> float:
        return self.tp / (self.tp + self.fn) if self.tp + self.fn else 0.0

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2.0 * p * r / (p + r) if p + r else 0.0


@dataclass(frozen=True)
class MetricsReport:
    accuracy: float
    precision: float
    recall: float
    f1: float
    matrix: ConfusionMatrix
    algorithm: str = ""
    corpus: str = ""
    notes: str = ""

    def as_dict(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "corpus": self.corpus,
            "accuracy": self.accuracy,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "matrix": {
                "tp": self.matrix.tp, "tn": self.matrix.tn,
                "fp": self.matrix.fp, "fn": self.matrix.fn,
            },
            "notes": self.notes,
        }


# Reference evaluation published for the original 380,009-record corpus.
# The confusion counts below imply accuracy/precision/recall of roughly
# 99.43/99.55/99.34, while the same source separately states headline
# metrics of 98.32/98.62/97.86 (F1 98.24) — the two sets are mutually
# inconsistent. This toolkit computes metrics from counts by formula and
# carries this note in report output rather than forcing either set.
REFERENCE_CONFUSION = ConfusionMatrix(tp=195879, tn=181958, fp=878, fn=1294)
REFERENCE_STATED_METRICS = {
    "accuracy": 0.9832, "precision": 0.9862, "recall": 0.9786, "f1": 0.9824,
}
REFERENCE_DISCREPANCY_NOTE = (
    "Reference counts (tp=195879, tn=181958, fp=878, fn=1294) imply "
    "accuracy=0.994284, precision=0.995538, recall=0.993437 by the standard "
    "formulas, which disagrees with the separately stated headline metrics "
    "accuracy=0.9832, precision=0.9862, recall=0.9786; the source figures "
    "are internally inconsistent. Values here are formula-derived."
)


def metrics(
    cm: ConfusionMatrix, algorithm: str = "", corpus: str = "", notes: str = "",
) -> MetricsReport:
    """Derive accuracy/precision/recall/F1 from counts (conventions: 0 when
    a denominator is empty)."""
    if cm.total < 1:
        raise EmptyCorpus("metrics need at least one counted record")
    return MetricsReport(
        accuracy=cm.accuracy,
        precision=cm.precision,
        recall=cm.recall,
        f1=cm.f1,
        matrix=cm,
        algorithm=algorithm,
        corpus=corpus,
        notes=notes,
    )


def reference_report() -> MetricsReport:
    """Metrics for the published reference confusion matrix, with the
    inconsistency note attached."""
    return metrics(
        REFERENCE_CONFUSION,
        algorithm="forest",
        corpus="reference",
        notes=REFERENCE_DISCREPANCY_NOTE,
    )


def confusion(model, test: LabeledCorpus) -> ConfusionMatrix:
    """Count the model's verdicts over a labeled corpus."""
    if len(test) == 0:
        raise EmptyCorpus("confusion over an empty corpus")
    if test.schema_hash != model.schema_hash:
        raise SchemaMismatch("test corpus schema differs from the model's")
    tp = tn = fp = fn = 0
    X, y = test.matrix(), test.labels()
    for i in range(len(test)):
        predicted, _p = model.predict_one(X[i])
        actual = int(y[i])
        if actual == 1:
            tp += predicted == 1
            fn += predicted == 0
        else:
            tn += predicted == 0
            fp += predicted == 1
    return ConfusionMatrix(tp=tp, tn=tn, fp=fp, fn=fn)


def compare_algorithms(
    corpus: LabeledCorpus,
    split_cfg: SplitConfig,
    configs: list[LearnerConfig],
) -> list[MetricsReport]:
    """Train and evaluate every config on one identical split; reports come
    back sorted by accuracy, best first."""
    if not configs:
        raise ValueError("compare_algorithms needs at least one config")
    train_set, test_set = split(corpus, split_cfg)
    reports = []
    for config in configs:
        model = train_learner(config, train_set)
        cm = confusion(model, test_set)
        reports.append(metrics(cm, algorithm=config.algorithm, corpus=corpus.source_name))
    reports.sort(key=lambda r: -r.accuracy)
    return reports


def default_comparison_configs(seed: int = 0) -> list[LearnerConfig]:
    return [LearnerConfig(algorithm=a, seed=seed) for a in
            ("forest", "tree", "gaussian_nb", "knn", "linear_svm")]


@dataclass(frozen=True)
class DailyBatch:
    date: str  # ISO yyyy-mm-dd
    urls: tuple[str, ...]


@dataclass(frozen=True)
class ZeroDayDay:
    day_index: int  # 1-based
    date: str
    urls: tuple[str, ...]
    correct: int    # predicted phishing (ground truth: the whole feed is phishing)
    incorrect: int
    skipped: int    # unparsable rows, excluded from the denominator


@dataclass(frozen=True)
class ZeroDayRun:
    days: tuple[ZeroDayDay, ...]
    overall_accuracy: float
    total_correct: int = 0
    total_incorrect: int = 0
    total_skipped: int = 0

    def as_summary(self) -> dict:
        return {
            "days": len(self.days),
            "urls_evaluated": self.total_correct + self.total_incorrect,
            "correct": self.total_correct,
            "incorrect": self.total_incorrect,
            "skipped_unparsable": self.total_skipped,
            "overall_accuracy": self.overall_accuracy,
            "overall_accuracy_percent": round(100.0 * self.overall_accuracy, 2),
        }


def ingest_feed(source: str, live: bool = False) -> list[DailyBatch]:
    """Read a zero-day feed: one 'ISO-date,URL' record per line, grouped by
    date and returned chronologically. Network fetch only with live=True."""
    text = _read_feed_text(source, live)
    by_date: dict[str, list[str]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        date_part, sep, url_part = line.partition(",")
        url = url_part.strip()
        if not sep or not url:
            raise MalformedFeedLine(f"line {lineno}: expected 'ISO-date,URL'")
        try:
            date = dt.date.fromisoformat(date_part.strip())
        except ValueError:
            raise MalformedFeedLine(
                f"line {lineno}: bad date {date_part.strip()!r}"
            ) from None
        by_date.setdefault(date.isoformat(), []).append(url)
    return [DailyBatch(date=d, urls=tuple(by_date[d])) for d in sorted(by_date)]


def _read_feed_text(source: str, live: bool) -> str:
    if source.startswith(("http://", "https://")):
        if not live:
            raise NetworkUnavailable(
                f"{source} is a remote feed; pass --live to allow fetching"
            )
        try:
            with urllib.request.urlopen(source, timeout=30) as resp:
                return resp.read().decode("utf-8")
        except OSError as exc:
            raise NetworkUnavailable(f"could not fetch {source}: {exc}") from None
    if not os.path.exists(source):
        raise MissingFile(f"feed file not found: {source}")
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def run_zero_day(model, batches: list[DailyBatch]) -> ZeroDayRun:
    """Replay daily all-phishing batches against a frozen model.

    A prediction is correct when the model says phishing. Unparsable URLs
    are counted and excluded from the accuracy denominator.
    """
    if not batches:
        raise EmptyCorpus("zero-day run needs at least one daily batch")
    days: list[ZeroDayDay] = []
    total_correct = total_incorrect = total_skipped = 0
    for i, batch in enumerate(batches, start=1):
        correct = incorrect = skipped = 0
        for url in batch.urls:
            try:
                fv = extract_features(url)
            except UrlSentryError:
                skipped += 1
                continue
            label, _p = model.predict_one(fv.values)
            if label == 1:
                correct += 1
            else:
                incorrect += 1
        days.append(ZeroDayDay(i, batch.date, batch.urls, correct, incorrect, skipped))
        total_correct += correct
        total_incorrect += incorrect
        total_skipped += skipped
    evaluated = total_correct + total_incorrect
    overall = total_correct / evaluated if evaluated else 0.0
    return ZeroDayRun(
        days=tuple(days),
        overall_accuracy=overall,
        total_correct=total_correct,
        total_incorrect=total_incorrect,
        total_skipped=total_skipped,
    )


# --- report writers ---

def write_metrics_json(reports: list[MetricsReport], path) -> None:
    doc = [r.as_dict() for r in reports]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_comparison_csv(reports: list[MetricsReport], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["algorithm", "accuracy", "precision", "recall", "f1"])
        for r in reports:
            writer.writerow([
                r.algorithm,
                f"{r.accuracy:.6f}", f"{r.precision:.6f}",
                f"{r.recall:.6f}", f"{r.f1:.6f}",
            ])


def write_zero_day_csv(run: ZeroDayRun, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["date", "total", "correct", "incorrect"])
        for day in run.days:
            writer.writerow(
                [day.date, day.correct + day.incorrect, day.correct, day.incorrect]
            )


def write_zero_day_summary(run: ZeroDayRun, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(run.as_summary(), fh, indent=2, sort_keys=True)
        fh.write("\n")
