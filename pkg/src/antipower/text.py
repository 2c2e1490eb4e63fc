"""Dense integer text representation and hit coordinates.

Input bytes are remapped to a dense alphabet 0..sigma-1 that preserves the
original byte order, so substring comparisons (and the ranks derived from
them) agree between the original and the dense form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True, slots=True)
class Text:
    """Immutable text over a dense integer alphabet.

    ``symbols[i]`` is in ``[0, sigma)`` and ``alphabet_map[c]`` is the
    original symbol (byte value or integer token) for dense code ``c``.
    ``alphabet_map`` is strictly increasing, so the remap is order-preserving.
    """

    symbols: tuple[int, ...]
    alphabet_map: tuple[int, ...]

    def __post_init__(self) -> None:
        sigma = len(self.alphabet_map)
        if any(self.alphabet_map[i] >= self.alphabet_map[i + 1] for i in range(sigma - 1)):
            raise ValueError("alphabet_map must be strictly increasing")
        if any(not 0 <= s < sigma for s in self.symbols):
            raise ValueError("symbol out of range for alphabet_map")

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def sigma(self) -> int:
        return len(self.alphabet_map)

    def __len__(self) -> int:
        return len(self.symbols)

    def to_bytes(self) -> bytes:
        """Render back to bytes. Inverse of from_bytes."""
        if any(v > 255 or v < 0 for v in self.alphabet_map):
            raise ValueError("alphabet contains non-byte symbols")
        return bytes(self.alphabet_map[s] for s in self.symbols)

    def substring(self, start: int, stop: int) -> tuple[int, ...]:
        """Dense codes of the half-open slice [start, stop)."""
        return self.symbols[start:stop]


def from_bytes(data: bytes) -> Text:
    """Build a Text from raw bytes. Empty input is allowed."""
    alphabet = sorted(set(data))
    code = {b: c for c, b in enumerate(alphabet)}
    return Text(tuple(code[b] for b in data), tuple(alphabet))


def from_symbols(values: Iterable[int]) -> Text:
    """Build a Text from arbitrary integer symbols (dense-remapped).

    Useful for alphabets larger than 256, e.g. all-distinct test inputs.
    """
    seq = list(values)
    alphabet = sorted(set(seq))
    code = {v: c for c, v in enumerate(alphabet)}
    return Text(tuple(code[v] for v in seq), tuple(alphabet))


@dataclass(frozen=True, slots=True)
class AntiPowerHit:
    """One occurrence: ``order`` pairwise-distinct blocks of length
    ``anti_period`` starting at 0-based position ``start``."""

    start: int
    anti_period: int
    order: int

    def __post_init__(self) -> None:
        if self.start < 0:
            raise ValueError("start must be >= 0")
        if self.anti_period < 1:
            raise ValueError("anti_period must be >= 1")
        if self.order < 2:
            raise ValueError("order must be >= 2")

    @property
    def length(self) -> int:
        return self.order * self.anti_period

    @property
    def end(self) -> int:
        """0-based exclusive end."""
        return self.start + self.length


def to_one_based_coords(hit: AntiPowerHit) -> tuple[int, int]:
    """Convert a hit to 1-based inclusive (start, end) coordinates."""
    return hit.start + 1, hit.start + hit.length
