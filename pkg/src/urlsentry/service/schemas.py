"""Request/response bodies for the verdict service.

The verdict strings are load-bearing: the browser extension matches the
exact strings "Phishing" and "Legitimate", nothing else.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel


class PredictRequest(BaseModel):
    url: str = ""


class PredictResponse(BaseModel):
    verdict: Literal["Phishing", "Legitimate"]
    probability: float  # model's estimate that the URL is phishing
    source: Literal["model", "blocklist"]


class ReportRequest(BaseModel):
    url: str = ""
    reason: Optional[str] = None


class ReportResponse(BaseModel):
    status: Literal["recorded"] = "recorded"


class HealthResponse(BaseModel):
    status: Literal["ok"] = "ok"
    model_schema_hash: str
    model_algorithm: str
