import math

import numpy as np
import pytest

from urlsentry.errors import DegenerateCorpus, KTooLarge, UnknownHyperparameter
from urlsentry.learners import (
    LearnerConfig,
    train_gaussian_nb,
    train_knn,
    train_learner,
    train_linear_svm,
)
from urlsentry.rng import SplitMix64

from test_tree import corpus_from_matrix


def gaussian_clusters(n_per_class=30, center=8.0, spread=0.5, seed=5):
    """Two well-separated blobs on two features."""
    rng = SplitMix64(seed)

    def gauss():
        # Box-Muller from the repo PRNG keeps the fixture reproducible.
        u1 = max(rng.random(), 1e-12)
        u2 = rng.random()
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)

    X, y = [], []
    for label, offset in ((0, -center), (1, center)):
        for _ in range(n_per_class):
            X.append([offset + spread * gauss(), offset + spread * gauss()])
            y.append(label)
    return X, y


class TestGaussianNB:
    def test_separated_clusters_perfect_training_accuracy(self):
        X, y = gaussian_clusters()
        corpus = corpus_from_matrix(X, y)
        model = train_gaussian_nb(corpus)
        matrix = corpus.matrix()
        predicted = [model.predict_one(matrix[i])[0] for i in range(len(y))]
        assert predicted == y

    def test_symmetric_boundary_at_midpoint(self):
        X = [[-4.0], [-2.0], [2.0], [4.0]]
        y = [0, 0, 1, 1]
        model = train_gaussian_nb(corpus_from_matrix(X, y))
        just_left = np.zeros(42); just_left[0] = -0.01
        just_right = np.zeros(42); just_right[0] = 0.01
        assert model.predict_one(just_left)[0] == 0
        assert model.predict_one(just_right)[0] == 1

    def test_zero_variance_feature_no_nan(self):
        X = [[1.0, 5.0], [2.0, 5.0], [3.0, 5.0], [4.0, 5.0]]
        y = [0, 0, 1, 1]
        model = train_gaussian_nb(corpus_from_matrix(X, y))
        label, p = model.predict_one(corpus_from_matrix(X, y).matrix()[0])
        assert label in (0, 1)
        assert math.isfinite(p)

    def test_single_label_rejected(self):
        X = [[1.0], [2.0]]
        with pytest.raises(DegenerateCorpus):
            train_gaussian_nb(corpus_from_matrix(X, [1, 1]))

    def test_probability_consistent_with_label(self):
        X, y = gaussian_clusters(n_per_class=20, center=3.0, spread=2.0, seed=9)
        corpus = corpus_from_matrix(X, y)
        model = train_gaussian_nb(corpus)
        matrix = corpus.matrix()
        for i in range(len(y)):
            label, p = model.predict_one(matrix[i])
            assert (label == 1) == (p >= 0.5)


class TestKnn:
    def test_k1_returns_own_label(self):
        X = [[0.0], [1.0], [2.0], [3.0]]
        y = [0, 1, 0, 1]
        corpus = corpus_from_matrix(X, y)
        model = train_knn(corpus, k=1)
        matrix = corpus.matrix()
        for i in range(4):
            assert model.predict_one(matrix[i])[0] == y[i]

    def test_k3_hand_computed_majority(self):
        # Query 2.1: nearest three training points are 2.0(label 1),
        # 3.0(label 1), 1.0(label 0) -> majority phishing.
        X = [[0.0], [1.0], [2.0], [3.0], [10.0]]
        y = [0, 0, 1, 1, 0]
        model = train_knn(corpus_from_matrix(X, y), k=3)
        q = np.zeros(42); q[0] = 2.1
        label, p = model.predict_one(q)
        assert label == 1
        assert p == pytest.approx(2 / 3)

    def test_constant_feature_excluded(self):
        # Feature 1 is constant; only feature 0 should drive distance.
        X = [[0.0, 7.7], [1.0, 7.7], [10.0, 7.7], [11.0, 7.7]]
        y = [0, 0, 1, 1]
        model = train_knn(corpus_from_matrix(X, y), k=1)
        q = np.zeros(42)
        q[0], q[1] = 0.4, -1000.0  # wildly off on the dead feature
        assert model.predict_one(q)[0] == 0

    def test_vote_tie_falls_to_nearest(self):
        X = [[0.0], [0.2], [5.0], [6.0]]
        y = [0, 0, 1, 1]
        model = train_knn(corpus_from_matrix(X, y), k=4, standardize=False)
        q = np.zeros(42); q[0] = 0.1
        label, p = model.predict_one(q)
        assert p == 0.5
        assert label == 0  # nearest neighbor is the 0.0/label-0 point

    def test_distance_tie_lower_index_wins(self):
        X = [[1.0], [1.0], [9.9]]
        y = [1, 0, 0]
        model = train_knn(corpus_from_matrix(X, y), k=1, standardize=False)
        q = np.zeros(42); q[0] = 1.0
        assert model.predict_one(q)[0] == 1  # index 0 beats identical index 1

    def test_k_too_large(self):
        with pytest.raises(KTooLarge):
            train_knn(corpus_from_matrix([[1.0], [2.0]], [0, 1]), k=3)


class TestLinearSvm:
    def test_separable_perfect_training_accuracy(self):
        X, y = gaussian_clusters(n_per_class=25, center=5.0, spread=0.3, seed=2)
        corpus = corpus_from_matrix(X, y)
        model = train_linear_svm(corpus, seed=1)
        matrix = corpus.matrix()
        predicted = [model.predict_one(matrix[i])[0] for i in range(len(y))]
        assert predicted == y

    def test_single_label_rejected(self):
        with pytest.raises(DegenerateCorpus):
            train_linear_svm(corpus_from_matrix([[1.0], [2.0]], [0, 0]))

    def test_deterministic_weights(self):
        X, y = gaussian_clusters(n_per_class=10, seed=3)
        corpus = corpus_from_matrix(X, y)
        a = train_linear_svm(corpus, seed=77)
        b = train_linear_svm(corpus, seed=77)
        assert np.array_equal(a.weights, b.weights)

    def test_probability_is_margin_sigmoid(self):
        X, y = gaussian_clusters(n_per_class=10, seed=4)
        corpus = corpus_from_matrix(X, y)
        model = train_linear_svm(corpus, seed=5)
        q = corpus.matrix()[0]
        label, p = model.predict_one(q)
        assert 0.0 < p < 1.0
        assert (label == 1) == (p >= 0.5)


class TestLearnerConfig:
    def test_unknown_hyperparameter_rejected(self):
        with pytest.raises(UnknownHyperparameter):
            LearnerConfig(algorithm="forest", hyperparameters={"depth": 3})
        with pytest.raises(UnknownHyperparameter):
            LearnerConfig(algorithm="knn", hyperparameters={"n_estimators": 5})

    def test_unknown_algorithm_rejected(self):
        with pytest.raises(ValueError):
            LearnerConfig(algorithm="xgboost")

    def test_dispatch_trains_every_algorithm(self, toy_corpus):
        for algorithm in ("forest", "tree", "gaussian_nb", "knn", "linear_svm"):
            hp = {"n_estimators": 3} if algorithm == "forest" else {}
            hp = {"k": 3} if algorithm == "knn" else hp
            model = train_learner(LearnerConfig(algorithm=algorithm, hyperparameters=hp, seed=1),
                                  toy_corpus)
            assert model.algorithm == algorithm
            label, p = model.predict_one(toy_corpus.matrix()[0])
            assert label in (0, 1)
            assert 0.0 <= p <= 1.0

    def test_every_learner_deterministic_on_probe_set(self, toy_corpus):
        from urlsentry.features import extract_features
        from urlgen import fuzz_urls

        probes = [extract_features(u).values for u in fuzz_urls(50, seed=61)]
        for algorithm in ("forest", "tree", "gaussian_nb", "knn", "linear_svm"):
            hp = {"n_estimators": 4} if algorithm == "forest" else {}
            hp = {"k": 3} if algorithm == "knn" else hp
            config = LearnerConfig(algorithm=algorithm, hyperparameters=hp, seed=9)
            first = train_learner(config, toy_corpus)
            second = train_learner(config, toy_corpus)
            for x in probes:
                assert first.predict_one(x) == second.predict_one(x), algorithm
