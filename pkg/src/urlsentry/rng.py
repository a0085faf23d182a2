"""Repo-wide deterministic PRNG.

Every seeded operation in this package (splits, bootstraps, feature
subsampling, SGD order) draws from SplitMix64 as implemented here, never
from ``random`` or numpy's generators. The stream is therefore identical
across platforms and library versions, which is what lets golden fixtures
and byte-identical model files work.

SplitMix64: 64-bit additive counter passed through a murmur-style finalizer
(constants from the reference implementation by Sebastiano Vigna).
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(x: int) -> int:
    """SplitMix64 finalizer: a high-quality 64-bit bijective hash."""
    x &= MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Deterministic child seed for stream ``index`` of a parent ``seed``.

    Used to give each forest tree (and each parallelizable unit generally)
    an independent stream so that assembly order cannot change results.
    """
    return mix64((mix64(seed) + _GOLDEN * (index + 1)) & MASK64)


class SplitMix64:
    """Seeded generator with the handful of draws the toolkit needs."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & MASK64
        return mix64(self._state)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n). Rejection sampling, no modulo bias."""
        if n <= 0:
            raise ValueError("randrange() bound must be positive")
        limit = MASK64 - (MASK64 + 1) % n
        while True:
            v = self.next_u64()
            if v <= limit:
                return v % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample_indices(self, n: int, k: int) -> list[int]:
        """k distinct integers from [0, n), order randomized."""
        if not 0 <= k <= n:
            raise ValueError("sample_indices() requires 0 <= k <= n")
        pool = list(range(n))
        for i in range(k):
            j = i + self.randrange(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]
