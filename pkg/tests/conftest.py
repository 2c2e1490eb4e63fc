"""Shared helpers: tiny brute-force oracles the optimized code is tested
against, and input builders."""

from __future__ import annotations

import random

from antipower.text import Text, from_bytes


def T(s: str) -> Text:
    """Text from an ASCII literal."""
    return from_bytes(s.encode("ascii"))


def brute_distinct_windows(seq, k: int) -> list[int]:
    """All j with seq[j, j+k) pairwise distinct, by checking every pair."""
    out = []
    for j in range(len(seq) - k + 1):
        window = seq[j : j + k]
        if all(window[a] != window[b] for a in range(k) for b in range(a + 1, k)):
            out.append(j)
    return out


def brute_longest_distinct(seq) -> tuple[int, int]:
    """Leftmost longest pairwise-distinct window, by trying every window."""
    best = (0, 0)
    for j in range(len(seq)):
        for length in range(1, len(seq) - j + 1):
            window = seq[j : j + length]
            if len(set(window)) == length and length > best[1]:
                best = (j, length)
    return best


def brute_substring_ranks(text: Text, p: int) -> list[int]:
    """Names for length-p substrings by explicit collect-dedup-sort."""
    subs = [text.symbols[i : i + p] for i in range(text.n - p + 1)]
    rank = {s: i + 1 for i, s in enumerate(sorted(set(subs)))}
    return [rank[s] for s in subs]


def random_text(rng: random.Random, n: int, sigma: int) -> Text:
    return from_bytes(bytes(rng.randrange(97, 97 + sigma) for _ in range(n)))
