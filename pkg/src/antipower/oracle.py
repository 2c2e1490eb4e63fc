"""Brute-force ground truth for anti-power queries.

Deliberately simple: blocks are compared symbol by symbol, with no naming
or hashing, so this module can serve as the independent reference that the
optimized search is tested against. Intended for small inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .text import AntiPowerHit, Text


@dataclass(frozen=True, slots=True)
class QueryTriple:
    """Membership query: is the substring at 1-based inclusive [i, j] an
    anti-power of order k?"""

    i: int
    j: int
    k: int

    def __post_init__(self) -> None:
        if self.i < 1 or self.j < self.i:
            raise ValueError("need 1 <= i <= j")
        if self.k < 1:
            raise ValueError("order k must be >= 1")


def is_anti_power(text: Text, query: QueryTriple) -> bool:
    """Check one substring by direct pairwise block comparison, O(k^2 p)."""
    if query.j > text.n:
        raise ValueError(f"query end {query.j} exceeds text length {text.n}")
    length = query.j - query.i + 1
    if length % query.k != 0:
        raise ValueError(f"substring length {length} is not divisible by order {query.k}")
    p = length // query.k
    base = query.i - 1
    syms = text.symbols
    blocks = [syms[base + a * p : base + (a + 1) * p] for a in range(query.k)]
    for a in range(query.k):
        for b in range(a + 1, query.k):
            if blocks[a] == blocks[b]:
                return False
    return True


def enumerate_all(text: Text, k: int) -> set[AntiPowerHit]:
    """Every anti-power occurrence of order k, by trying all (start, p)."""
    if k < 2:
        raise ValueError(f"order k must be >= 2, got {k}")
    hits: set[AntiPowerHit] = set()
    n = text.n
    for p in range(1, n // k + 1):
        span = k * p
        for start in range(n - span + 1):
            if is_anti_power(text, QueryTriple(start + 1, start + span, k)):
                hits.add(AntiPowerHit(start, p, k))
    return hits
