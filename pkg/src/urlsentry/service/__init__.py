"""Verdict service: FastAPI app, blocklist store, request/response models."""

from .app import LEGITIMATE, PHISHING, create_app
from .blocklist import Blocklist, ReportEntry, normalize_url
from .schemas import (
    HealthResponse,
    PredictRequest,
    PredictResponse,
    ReportRequest,
    ReportResponse,
)

__all__ = [
    "Blocklist",
    "HealthResponse",
    "LEGITIMATE",
    "PHISHING",
    "PredictRequest",
    "PredictResponse",
    "ReportEntry",
    "ReportRequest",
    "ReportResponse",
    "create_app",
    "normalize_url",
]
