"""64-bit content digests.

One algorithm everywhere: the first 64 bits of SHA-256, rendered as 16
lowercase hex characters. Used for the feature-schema hash and for model
file integrity. Documented in docs/model_format.md.
"""

import hashlib


def digest64(data: bytes | str) -> str:
    if isinstance(data, str):
        data = data.encode("utf-8")
    return hashlib.sha256(data).hexdigest()[:16]
