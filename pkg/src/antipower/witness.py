"""Lower-bound witness strings and the certified occurrence bound.

The witness of parameter m concatenates the binary expansions of
0, 1, ..., m, each followed by "$". Any factor long enough to contain two
"$" symbols occurs exactly once, which forces an abundance of anti-power
occurrences: the count of order-k occurrences with anti-period above
3 + 2*ceil(log2 m) is at least n^2/(2k) - 7n/2 - 2n*ceil(log2 m).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .text import Text, from_bytes

DOLLAR = ord("$")


@dataclass(frozen=True, slots=True)
class WitnessParams:
    """Construction parameters: m, the resulting length n, and the
    ceil(log2 m) term used by threshold and bound (0 when m <= 1)."""

    m: int
    n: int
    log_term: int


def ceil_log2(m: int) -> int:
    """ceil(log2 m) for m >= 1, with ceil_log2(1) == 0."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return (m - 1).bit_length()


def witness_params(m: int) -> WitnessParams:
    if m < 0:
        raise ValueError("m must be >= 0")
    n = sum(max(1, i.bit_length()) + 1 for i in range(m + 1))
    return WitnessParams(m=m, n=n, log_term=ceil_log2(m) if m >= 1 else 0)


def generate(m: int) -> Text:
    """The witness string for parameter m, e.g. m=5 -> "0$1$10$11$100$101$"."""
    if m < 0:
        raise ValueError("m must be >= 0")
    parts = []
    for i in range(m + 1):
        parts.append(format(i, "b"))
        parts.append("$")
    return from_bytes("".join(parts).encode("ascii"))


def lower_bound_value(n: int, k: int, m: int) -> int:
    """floor(n^2/(2k) - 7n/2 - 2n*ceil(log2 m)), possibly negative.

    When positive, this certifies a lower bound on the number of order-k
    occurrences in the witness of parameter m (length n) whose anti-period
    exceeds 3 + 2*ceil(log2 m). Flooring only weakens the bound.
    """
    if k < 2:
        raise ValueError("order k must be >= 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    log_term = ceil_log2(m)
    return (n * n - 7 * n * k - 4 * k * n * log_term) // (2 * k)


def anti_period_threshold(m: int) -> int:
    """Anti-periods strictly above this value are covered by the bound."""
    return 3 + 2 * (ceil_log2(m) if m >= 1 else 0)


def check_unique_dollar_factors(text: Text) -> bool:
    """True iff every factor with at least two "$" symbols occurs exactly
    once in the text. Exhaustive enumeration; intended for small texts."""
    raw = text.to_bytes()
    if set(raw) - {DOLLAR, ord("0"), ord("1")}:
        raise ValueError("text must be over the alphabet {0, 1, $}")
    n = len(raw)
    occurrences: Counter[bytes] = Counter()
    for i in range(n):
        dollars = 0
        for j in range(i + 1, n + 1):
            if raw[j - 1] == DOLLAR:
                dollars += 1
            if dollars >= 2:
                occurrences[raw[i:j]] += 1
    return all(c == 1 for c in occurrences.values())
