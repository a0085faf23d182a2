"""HTTP verdict service.

Endpoints (documented in docs/api.md):

* ``POST /predict`` — blocklist first (exact normalized URL, then host);
  otherwise featurize and ask the model. 400 on missing/unparsable input,
  503 when no model is loaded.
* ``POST /report`` — append to the blocklist, 201. Reported URLs are
  blocked immediately, without review; see the poisoning note in the docs.
* ``GET /health`` — 200 with the loaded model's schema hash and algorithm,
  503 when none is loaded.

The model is immutable shared state, safe for concurrent readers; blocklist
appends serialize internally. CORS is wide open on purpose so the extension
can call from any page context.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from ..errors import UrlSentryError
from ..features import extract_features
from ..model_store import load_model
from .blocklist import Blocklist
from .schemas import (
    HealthResponse,
    PredictRequest,
    PredictResponse,
    ReportRequest,
    ReportResponse,
)

PHISHING = "Phishing"
LEGITIMATE = "Legitimate"


def create_app(
    model_path: str | None = None,
    blocklist_path: str = "blocklist.jsonl",
    model=None,
) -> FastAPI:
    """Build the service. Pass a model object directly (tests) or a path."""
    if model is None and model_path is not None:
        model = load_model(model_path)
    blocklist = Blocklist(blocklist_path)

    app = FastAPI(title="urlsentry verdict service", version="1")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.model = model
    app.state.blocklist = blocklist

    @app.exception_handler(RequestValidationError)
    async def bad_body(_request: Request, _exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": "missing_url"})

    @app.post("/predict", response_model=PredictResponse)
    async def predict(body: PredictRequest):
        url = body.url.strip()
        if not url:
            return JSONResponse(status_code=400, content={"error": "missing_url"})
        if blocklist.contains(url):
            return PredictResponse(verdict=PHISHING, probability=1.0, source="blocklist")
        if app.state.model is None:
            return JSONResponse(status_code=503, content={"error": "model_not_loaded"})
        try:
            features = extract_features(url)
        except UrlSentryError:
            return JSONResponse(status_code=400, content={"error": "unparsable_url"})
        label, probability = app.state.model.predict_one(features.values)
        return PredictResponse(
            verdict=PHISHING if label == 1 else LEGITIMATE,
            probability=probability,
            source="model",
        )

    @app.post("/report", response_model=ReportResponse, status_code=201)
    async def report(body: ReportRequest):
        url = body.url.strip()
        if not url:
            return JSONResponse(status_code=400, content={"error": "missing_url"})
        blocklist.add(url, body.reason)
        return ReportResponse()

    @app.get("/health", response_model=HealthResponse)
    async def health():
        if app.state.model is None:
            return JSONResponse(status_code=503, content={"error": "model_not_loaded"})
        return HealthResponse(
            model_schema_hash=app.state.model.schema_hash,
            model_algorithm=app.state.model.algorithm,
        )

    return app
