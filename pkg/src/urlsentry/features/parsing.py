"""URL parsing and registered-domain splitting.

Parsing is deliberately forgiving: the service sits in front of whatever a
browser hands it, so anything with a recognizable hostname is accepted.
Inputs without a scheme are treated as ``http://`` + input, matching what a
user types into an address bar. Punycode hostnames are kept as-is (a
feature flags them; nothing decodes them).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from urllib.parse import urlsplit

from ..errors import EmptyInput, UnparsableUrl

_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.-]*://")
_IPV4_RE = re.compile(r"^\d{1,3}\.\d{1,3}\.\d{1,3}\.\d{1,3}$")


def _load_list(name: str) -> frozenset[str]:
    text = resources.files("urlsentry.features").joinpath(f"data/{name}").read_text("utf-8")
    entries = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip().lower()
        if line:
            entries.add(line)
    return frozenset(entries)


PUBLIC_SUFFIXES = _load_list("public_suffixes.txt")
SUSPICIOUS_WORDS = _load_list("suspicious_words.txt")
SHORTENER_DOMAINS = _load_list("shorteners.txt")


def is_ipv4(hostname: str) -> bool:
    if not _IPV4_RE.match(hostname):
        return False
    return all(int(octet) <= 255 for octet in hostname.split("."))


@dataclass(frozen=True)
class ParsedUrl:
    scheme: str
    hostname: str
    port: int | None
    path: str
    query: str
    registered_domain: str
    subdomain_labels: tuple[str, ...]
    tld: str

    def normalized(self) -> str:
        """Reassemble scheme://host[:port]path[?query] (fragment dropped)."""
        out = f"{self.scheme}://{self.hostname}"
        if self.port is not None:
            out += f":{self.port}"
        out += self.path
        if self.query:
            out += f"?{self.query}"
        return out


def ensure_scheme(raw: str) -> str:
    """The effective URL string features are computed over."""
    s = raw.strip()
    if not _SCHEME_RE.match(s):
        s = "http://" + s
    return s


def split_registered_domain(hostname: str) -> tuple[str, tuple[str, ...], str]:
    """(registered_domain, subdomain_labels, tld) per the bundled suffix snapshot.

    Longest matching suffix wins. IPv4 literals have no TLD. A hostname that
    *is* a public suffix, or a single label, is its own registered domain.
    """
    if is_ipv4(hostname):
        return hostname, (), ""
    labels = hostname.rstrip(".").split(".")
    for i in range(len(labels)):
        candidate = ".".join(labels[i:])
        if candidate in PUBLIC_SUFFIXES:
            if i == 0:
                return hostname, (), candidate
            return ".".join(labels[i - 1:]), tuple(labels[: i - 1]), candidate
    if len(labels) >= 2:
        return ".".join(labels[-2:]), tuple(labels[:-2]), labels[-1]
    return hostname, (), ""


def parse_url(raw: str) -> ParsedUrl:
    if raw is None or not raw.strip():
        raise EmptyInput("URL is empty")
    s = ensure_scheme(raw)
    try:
        parts = urlsplit(s)
    except ValueError as exc:
        raise UnparsableUrl(f"cannot split URL: {exc}") from None
    hostname = parts.hostname
    if not hostname:
        raise UnparsableUrl(f"no hostname in {raw!r}")
    try:
        port = parts.port
    except ValueError:
        raise UnparsableUrl(f"invalid port in {raw!r}") from None
    if port is not None and not 1 <= port <= 65535:
        raise UnparsableUrl(f"port out of range in {raw!r}")
    registered, subdomains, tld = split_registered_domain(hostname)
    return ParsedUrl(
        scheme=parts.scheme.lower(),
        hostname=hostname,
        port=port,
        path=parts.path,
        query=parts.query,
        registered_domain=registered,
        subdomain_labels=subdomains,
        tld=tld,
    )
