import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))  # for the urlgen helper

from urlsentry.corpus import SplitConfig, from_urls, load_corpus, split
from urlsentry.learners import ForestParams, train_forest

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA_DIR = os.path.join(REPO_ROOT, "data")
DESK_CORPUS_PATH = os.path.join(DATA_DIR, "desk_corpus.csv")
DESK_MANIFEST_PATH = os.path.join(DATA_DIR, "desk_corpus_manifest.json")
ZERO_DAY_FEED_PATH = os.path.join(DATA_DIR, "zero_day_feed.txt")

# One seed governs every desk-fixture artifact: the split, the forest, and
# the frozen zero-day feed were all produced under it.
DESK_SEED = 1337


@pytest.fixture(scope="session")
def desk_corpus():
    return load_corpus(DESK_CORPUS_PATH)


@pytest.fixture(scope="session")
def desk_split(desk_corpus):
    return split(desk_corpus, SplitConfig(test_fraction=0.3, seed=DESK_SEED))


@pytest.fixture(scope="session")
def desk_forest(desk_split):
    train_set, _test_set = desk_split
    return train_forest(train_set, ForestParams(), seed=DESK_SEED)


@pytest.fixture(scope="session")
def toy_corpus():
    """Small hand-built corpus: 6 legitimate, 6 phishing, all parseable."""
    pairs = [
        ("https://example.com", 0),
        ("https://www.wikipedia.org/wiki/Main_Page", 0),
        ("https://github.com/numpy/numpy", 0),
        ("https://docs.python.org/3/library/csv.html", 0),
        ("https://news.ycombinator.com/item?id=1", 0),
        ("https://store.example.org/products", 0),
        ("http://192.168.12.9/login.php", 1),
        ("http://paypal-secure-verify.xyz/account/update", 1),
        ("https://hjkqzx1234.000webhostapp.com/signin.html", 1),
        ("http://secure-bank-login.top/confirm?session=aa81", 1),
        ("https://free-giftcards.icu/claim/paypal", 1),
        ("http://update-account-info.club/verify/login.php", 1),
    ]
    return from_urls(pairs, source_name="toy")
