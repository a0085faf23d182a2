"""Append-only blocklist backing the /report endpoint.

Storage is line-delimited JSON, replayed at startup: crash-safe, diffable,
no database. Appends are serialized under a lock and flushed to disk before
the in-memory index is updated, so a membership check never sees an entry
that is not durable.

Matching happens on a normalized form (lowercase scheme and host, default
port stripped, fragment dropped): first the exact normalized URL, then the
bare hostname — a reported page blocks its whole host.
"""

from __future__ import annotations

import datetime as dt
import json
import os
import threading
from dataclasses import dataclass

from ..errors import UrlSentryError
from ..features import parse_url

MAX_REASON_LENGTH = 512


@dataclass(frozen=True)
class ReportEntry:
    url: str
    reported_at: str  # UTC ISO-8601
    reason: str | None = None


def normalize_url(url: str) -> tuple[str, str | None]:
    """(normalized URL, hostname). Falls back to lowercased raw text for
    strings that do not parse — a report must never be dropped."""
    try:
        parsed = parse_url(url)
    except UrlSentryError:
        return url.strip().lower(), None
    port = parsed.port
    if (parsed.scheme, port) in (("http", 80), ("https", 443)):
        port = None
    normalized = f"{parsed.scheme}://{parsed.hostname}"
    if port is not None:
        normalized += f":{port}"
    normalized += parsed.path
    if parsed.query:
        normalized += f"?{parsed.query}"
    return normalized, parsed.hostname


class Blocklist:
    def __init__(self, path: str | os.PathLike):
        self._path = str(path)
        self._lock = threading.Lock()
        self._urls: set[str] = set()
        self._hosts: set[str] = set()
        self._replay()

    def _replay(self) -> None:
        if not os.path.exists(self._path):
            return
        with open(self._path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                entry = json.loads(line)
                self._index(entry["url"])

    def _index(self, url: str) -> None:
        normalized, host = normalize_url(url)
        self._urls.add(normalized)
        if host:
            self._hosts.add(host)

    def add(self, url: str, reason: str | None = None) -> ReportEntry:
        """Append a report durably and index it. Duplicates are fine: the
        file grows, membership does not."""
        if reason is not None:
            reason = reason[:MAX_REASON_LENGTH]
        entry = ReportEntry(
            url=url,
            reported_at=dt.datetime.now(dt.timezone.utc).isoformat(),
            reason=reason,
        )
        record = json.dumps(
            {"url": entry.url, "reported_at": entry.reported_at, "reason": entry.reason},
            sort_keys=True,
        )
        with self._lock:
            with open(self._path, "a", encoding="utf-8") as fh:
                fh.write(record + "\n")
                fh.flush()
                os.fsync(fh.fileno())
            self._index(url)
        return entry

    def contains(self, url: str) -> bool:
        normalized, host = normalize_url(url)
        with self._lock:
            if normalized in self._urls:
                return True
            return host is not None and host in self._hosts

    def __len__(self) -> int:
        with self._lock:
            return len(self._urls)
