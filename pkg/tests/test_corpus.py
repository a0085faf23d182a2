import csv

import pytest

from urlsentry.corpus import (
    CSV_PREFEATURIZED,
    SplitConfig,
    class_distribution,
    from_urls,
    load_corpus,
    split,
)
from urlsentry.errors import (
    DegenerateCorpus,
    EmptyCorpus,
    MissingColumn,
    MissingFile,
)
from urlsentry.features import CANONICAL_SCHEMA


def write_csv(path, rows, header=("url", "label")):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


class TestLoadCorpus:
    def test_four_row_fixture(self, tmp_path):
        path = tmp_path / "four.csv"
        write_csv(path, [
            ("https://example.com", "0"),
            ("https://wikipedia.org", "0"),
            ("http://phish-login.xyz/verify", "1"),
            ("http://10.0.0.1/signin", "1"),
        ])
        corpus = load_corpus(path)
        assert len(corpus) == 4
        assert corpus.skipped == ()
        assert class_distribution(corpus) == (2, 2)

    def test_invalid_label_recorded_and_skipped(self, tmp_path):
        path = tmp_path / "bad_label.csv"
        write_csv(path, [
            ("https://example.com", "0"),
            ("https://phish.top", "2"),
        ])
        corpus = load_corpus(path)
        assert len(corpus) == 1
        assert len(corpus.skipped) == 1
        assert corpus.skipped[0].line == 3
        assert "label" in corpus.skipped[0].reason

    def test_unparsable_url_recorded_and_skipped(self, tmp_path):
        path = tmp_path / "bad_url.csv"
        write_csv(path, [
            ("https://example.com", "0"),
            ("http:///nohost", "1"),
        ])
        corpus = load_corpus(path)
        assert len(corpus) == 1
        assert len(corpus.skipped) == 1

    def test_missing_file(self, tmp_path):
        with pytest.raises(MissingFile):
            load_corpus(tmp_path / "nope.csv")

    def test_missing_column(self, tmp_path):
        path = tmp_path / "cols.csv"
        write_csv(path, [("https://example.com",)], header=("url",))
        with pytest.raises(MissingColumn):
            load_corpus(path)

    def test_empty_corpus(self, tmp_path):
        path = tmp_path / "empty.csv"
        write_csv(path, [])
        with pytest.raises(EmptyCorpus):
            load_corpus(path)

    def test_dedupe_flag(self, tmp_path):
        path = tmp_path / "dups.csv"
        write_csv(path, [
            ("https://example.com", "0"),
            ("https://example.com", "0"),
            ("http://phish.top/login", "1"),
        ])
        assert len(load_corpus(path)) == 3  # duplicates kept by default
        assert len(load_corpus(path, dedupe=True)) == 2

    def test_prefeaturized_round_trip(self, tmp_path):
        source = from_urls([
            ("https://example.com", 0),
            ("http://phish-login.xyz/verify", 1),
        ])
        path = tmp_path / "pre.csv"
        header = ("url", *CANONICAL_SCHEMA.names, "label")
        rows = [
            (r.raw_url, *[repr(v) for v in r.features.values.tolist()], r.label)
            for r in source.records
        ]
        write_csv(path, rows, header=header)
        loaded = load_corpus(path, format=CSV_PREFEATURIZED)
        assert len(loaded) == 2
        for a, b in zip(source.records, loaded.records):
            assert a.features.values.tolist() == b.features.values.tolist()
            assert a.label == b.label


class TestSplit:
    def make_corpus(self, n0, n1):
        pairs = [(f"https://legit{i}.com", 0) for i in range(n0)]
        pairs += [(f"http://phish{i}-login.xyz/verify", 1) for i in range(n1)]
        return from_urls(pairs)

    def test_basic_sizes(self):
        corpus = self.make_corpus(5, 5)
        train, test = split(corpus, SplitConfig(test_fraction=0.3, seed=1))
        assert len(train) == 7
        assert len(test) == 3

    def test_deterministic_for_seed(self):
        corpus = self.make_corpus(50, 50)
        cfg = SplitConfig(test_fraction=0.3, seed=42)
        train1, test1 = split(corpus, cfg)
        train2, test2 = split(corpus, cfg)
        assert [r.raw_url for r in test1.records] == [r.raw_url for r in test2.records]
        assert [r.raw_url for r in train1.records] == [r.raw_url for r in train2.records]

    def test_different_seeds_differ(self):
        corpus = self.make_corpus(60, 60)
        _, test_a = split(corpus, SplitConfig(seed=1))
        _, test_b = split(corpus, SplitConfig(seed=2))
        assert {r.raw_url for r in test_a.records} != {r.raw_url for r in test_b.records}

    def test_stratified_counts_60_40(self):
        corpus = self.make_corpus(60, 40)
        _, test = split(corpus, SplitConfig(test_fraction=0.3, seed=7))
        n0, n1 = class_distribution(test)
        assert (n0, n1) == (18, 12)

    def test_partition_is_exact(self):
        corpus = self.make_corpus(40, 30)
        train, test = split(corpus, SplitConfig(test_fraction=0.25, seed=5))
        train_urls = {r.raw_url for r in train.records}
        test_urls = {r.raw_url for r in test.records}
        assert not train_urls & test_urls
        assert len(train) + len(test) == len(corpus)

    def test_stratification_within_one_record(self):
        corpus = self.make_corpus(70, 31)
        _, test = split(corpus, SplitConfig(test_fraction=0.3, seed=9))
        n0, n1 = class_distribution(test)
        assert abs(n0 - 0.3 * 70) <= 1
        assert abs(n1 - 0.3 * 31) <= 1

    def test_degenerate_single_label(self):
        pairs = [(f"https://site{i}.com", 0) for i in range(5)]
        corpus = from_urls(pairs)
        with pytest.raises(DegenerateCorpus):
            split(corpus, SplitConfig(seed=1))

    def test_unstratified(self):
        corpus = self.make_corpus(10, 0)
        train, test = split(corpus, SplitConfig(test_fraction=0.3, seed=3, stratified=False))
        assert len(test) == 3
        assert len(train) == 7

    def test_bad_fraction_rejected(self):
        with pytest.raises(ValueError):
            SplitConfig(test_fraction=1.0)
        with pytest.raises(ValueError):
            SplitConfig(test_fraction=0.0)


class TestClassDistribution:
    def test_counts_sum(self, toy_corpus):
        n0, n1 = class_distribution(toy_corpus)
        assert n0 + n1 == len(toy_corpus)
        assert (n0, n1) == (6, 6)

    def test_reference_totals(self):
        # The published corpus this toolkit mirrors: the two class counts
        # must add up to the stated grand total.
        assert 196_757 + 183_252 == 380_009
