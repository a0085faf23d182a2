import json
import threading

import pytest
from fastapi.testclient import TestClient

from urlsentry.learners import ForestParams, train_forest
from urlsentry.service import create_app
from urlsentry.service.blocklist import Blocklist, normalize_url


@pytest.fixture()
def toy_app(toy_corpus, tmp_path):
    model = train_forest(toy_corpus, ForestParams(n_estimators=15), seed=6)
    app = create_app(model=model, blocklist_path=str(tmp_path / "blocklist.jsonl"))
    return app


@pytest.fixture()
def client(toy_app):
    with TestClient(toy_app) as c:
        yield c


class TestNormalizeUrl:
    def test_lowercases_and_strips_default_port(self):
        assert normalize_url("HTTPS://Example.COM:443/Path")[0] == "https://example.com/Path"
        assert normalize_url("http://example.com:80/a")[0] == "http://example.com/a"

    def test_keeps_explicit_port(self):
        assert normalize_url("http://example.com:8080/a")[0] == "http://example.com:8080/a"

    def test_drops_fragment(self):
        normalized, host = normalize_url("http://example.com/a#frag")
        assert normalized == "http://example.com/a"
        assert host == "example.com"

    def test_unparsable_falls_back_to_raw(self):
        normalized, host = normalize_url("::::")
        assert normalized == "::::"
        assert host is None


class TestBlocklist:
    def test_replay_from_disk(self, tmp_path):
        path = tmp_path / "bl.jsonl"
        first = Blocklist(path)
        first.add("http://phish.example.xyz/login", reason="test")
        second = Blocklist(path)
        assert second.contains("http://phish.example.xyz/login")
        assert len(second) == 1

    def test_duplicate_reports_one_member(self, tmp_path):
        bl = Blocklist(tmp_path / "bl.jsonl")
        bl.add("http://phish.example.xyz/a")
        bl.add("http://phish.example.xyz/a")
        assert len(bl) == 1

    def test_hostname_match(self, tmp_path):
        bl = Blocklist(tmp_path / "bl.jsonl")
        bl.add("http://phish.example.xyz/some/page")
        assert bl.contains("http://phish.example.xyz/other/page")

    def test_reason_truncated(self, tmp_path):
        bl = Blocklist(tmp_path / "bl.jsonl")
        entry = bl.add("http://phish.example.xyz/a", reason="x" * 10_000)
        assert len(entry.reason) == 512

    def test_concurrent_appends_all_durable(self, tmp_path):
        path = tmp_path / "bl.jsonl"
        bl = Blocklist(path)

        def add_many(base):
            for i in range(20):
                bl.add(f"http://site-{base}-{i}.xyz/p")

        threads = [threading.Thread(target=add_many, args=(t,)) for t in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        lines = [l for l in path.read_text().splitlines() if l.strip()]
        assert len(lines) == 80
        assert len(bl) == 80


class TestPredictEndpoint:
    def test_known_phishing_fixture_url(self, client):
        # Lexically loud phishing: the toy forest should flag it.
        r = client.post("/predict", json={"url": "http://paypal-secure-verify.xyz/account/update"})
        assert r.status_code == 200
        body = r.json()
        assert body["verdict"] == "Phishing"
        assert body["source"] == "model"
        assert 0.0 <= body["probability"] <= 1.0

    def test_verdict_strings_verbatim(self, client):
        verdicts = set()
        for url in ("https://example.com", "http://10.1.2.3/login.php?verify=1"):
            body = client.post("/predict", json={"url": url}).json()
            verdicts.add(body["verdict"])
        assert verdicts <= {"Phishing", "Legitimate"}

    def test_empty_url_is_400_missing(self, client):
        r = client.post("/predict", json={"url": ""})
        assert r.status_code == 400
        assert r.json() == {"error": "missing_url"}

    def test_absent_field_is_400_missing(self, client):
        r = client.post("/predict", json={})
        assert r.status_code == 400
        assert r.json() == {"error": "missing_url"}

    def test_invalid_body_is_400(self, client):
        r = client.post("/predict", content=b"not json",
                        headers={"content-type": "application/json"})
        assert r.status_code == 400
        assert r.json() == {"error": "missing_url"}

    def test_unparsable_url_is_400(self, client):
        r = client.post("/predict", json={"url": "http://:80/only-port"})
        assert r.status_code == 400
        assert r.json() == {"error": "unparsable_url"}

    def test_no_model_is_503(self, tmp_path):
        app = create_app(model=None, blocklist_path=str(tmp_path / "bl.jsonl"))
        with TestClient(app) as c:
            r = c.post("/predict", json={"url": "https://example.com"})
            assert r.status_code == 503
            assert r.json() == {"error": "model_not_loaded"}

    def test_identical_requests_identical_responses(self, client):
        a = client.post("/predict", json={"url": "https://example.com/x"}).json()
        b = client.post("/predict", json={"url": "https://example.com/x"}).json()
        assert a == b

    def test_cors_headers_permissive(self, client):
        r = client.post("/predict", json={"url": "https://example.com"},
                        headers={"Origin": "https://anywhere.example"})
        assert r.headers.get("access-control-allow-origin") == "*"


class TestReportEndpoint:
    def test_report_then_predict_uses_blocklist(self, client):
        url = "https://totally-clean.example.com/welcome"
        before = client.post("/predict", json={"url": url}).json()
        assert before["source"] == "model"
        r = client.post("/report", json={"url": url, "reason": "looked wrong"})
        assert r.status_code == 201
        assert r.json() == {"status": "recorded"}
        after = client.post("/predict", json={"url": url}).json()
        assert after == {"verdict": "Phishing", "probability": 1.0, "source": "blocklist"}

    def test_blocklist_precedence_never_legitimate(self, client):
        url = "https://www.wikipedia.org/"
        client.post("/report", json={"url": url})
        for _ in range(3):
            assert client.post("/predict", json={"url": url}).json()["verdict"] == "Phishing"

    def test_hostname_precedence_from_report(self, client):
        client.post("/report", json={"url": "https://bad-actor.example.net/one/page"})
        body = client.post(
            "/predict", json={"url": "https://bad-actor.example.net/completely/other"}
        ).json()
        assert body["source"] == "blocklist"

    def test_missing_url_400(self, client):
        r = client.post("/report", json={"url": "   "})
        assert r.status_code == 400
        assert r.json() == {"error": "missing_url"}

    def test_long_reason_accepted(self, client, toy_app):
        r = client.post("/report", json={"url": "http://x.example.org/", "reason": "y" * 10_000})
        assert r.status_code == 201


class TestHealthEndpoint:
    def test_healthy_with_model(self, client, toy_corpus):
        r = client.get("/health")
        assert r.status_code == 200
        body = r.json()
        assert body["status"] == "ok"
        assert body["model_schema_hash"] == toy_corpus.schema_hash
        assert body["model_algorithm"] == "forest"

    def test_503_without_model(self, tmp_path):
        app = create_app(model=None, blocklist_path=str(tmp_path / "bl.jsonl"))
        with TestClient(app) as c:
            assert c.get("/health").status_code == 503

    def test_schema_hash_matches_model_file(self, toy_corpus, tmp_path):
        from urlsentry.model_store import save_model

        model = train_forest(toy_corpus, ForestParams(n_estimators=3), seed=1)
        path = tmp_path / "m.json"
        save_model(model, path)
        file_hash = json.loads(path.read_text())["schema_hash"]
        app = create_app(model_path=str(path), blocklist_path=str(tmp_path / "bl.jsonl"))
        with TestClient(app) as c:
            assert c.get("/health").json()["model_schema_hash"] == file_hash
