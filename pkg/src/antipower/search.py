"""Locate every anti-power occurrence of a given order.

For each candidate anti-period p (rounds p = 1..n//k), positions congruent
to r modulo p form a sequence of substring names; a window of k pairwise
distinct names in that sequence is exactly an occurrence with anti-period
p. One naming refinement plus p window scans keep each round at O(n), for
O(n^2/k) total time and O(n) working space.

Results stream to a sink because the output itself can be as large as
Theta(n^2/k); nothing is materialized unless the caller asks for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .naming import NameTable, extend, initial_names
from .text import AntiPowerHit, Text
from .window import WindowScanner

ENGINES = ("auto", "python", "fast")

# below this much total work the pure-Python engine wins on constant factors
_FAST_WORK_THRESHOLD = 1_000_000


@dataclass(frozen=True, slots=True)
class SearchOptions:
    """Search configuration.

    ``max_anti_period`` of None means the maximum possible, n // k; larger
    values are clamped to it. Report order is fixed: ascending anti-period,
    then residue class, then position within the class.
    """

    min_anti_period: int = 1
    max_anti_period: Optional[int] = None
    engine: str = "auto"

    def __post_init__(self) -> None:
        if self.min_anti_period < 1:
            raise ValueError("min_anti_period must be >= 1")
        if self.max_anti_period is not None and self.max_anti_period < self.min_anti_period:
            raise ValueError("max_anti_period must be >= min_anti_period")
        if self.engine not in ENGINES:
            raise ValueError(f"engine must be one of {ENGINES}")


@dataclass(frozen=True, slots=True)
class Metastring:
    """Names of the length-p substrings starting at positions congruent to
    r modulo p, in increasing position order."""

    p: int
    r: int
    values: list[int]


class HitSink:
    """Consumer of search results.

    Engines deliver hits in blocks sharing one anti-period, in report
    order. Sinks that only need counts set ``wants_positions`` to False
    and receive ``on_count`` instead, which lets engines skip
    materializing start positions.
    """

    wants_positions = True

    def on_hits(self, anti_period: int, starts: Sequence[int]) -> None:
        raise NotImplementedError

    def on_count(self, anti_period: int, count: int) -> None:
        raise NotImplementedError


class CountingSink(HitSink):
    """Counts hits, overall and per anti-period."""

    wants_positions = False

    def __init__(self) -> None:
        self.total = 0
        self.by_period: dict[int, int] = {}

    def on_count(self, anti_period: int, count: int) -> None:
        self.total += count
        self.by_period[anti_period] = self.by_period.get(anti_period, 0) + count


class CollectingSink(HitSink):
    """Collects (start, anti_period) pairs in report order. Test adapter;
    beware that output can be Theta(n^2/k)."""

    def __init__(self) -> None:
        self.pairs: list[tuple[int, int]] = []

    def on_hits(self, anti_period: int, starts: Sequence[int]) -> None:
        self.pairs.extend((int(s), anti_period) for s in starts)


class CallbackSink(HitSink):
    """Invokes a callable once per hit, in report order."""

    def __init__(self, callback: Callable[[int, int], None]) -> None:
        self.callback = callback

    def on_hits(self, anti_period: int, starts: Sequence[int]) -> None:
        for s in starts:
            self.callback(int(s), anti_period)


def build_metastring(table: NameTable, r: int) -> Metastring:
    """Extract the residue-r name sequence from a round-p table, O(n/p)."""
    p = table.p
    if not 0 <= r < p:
        raise ValueError(f"residue {r} out of range [0, {p})")
    return Metastring(p=p, r=r, values=table.names[r::p])


def map_hit(p: int, r: int, j: int, k: int) -> AntiPowerHit:
    """Occurrence for a distinct window at index j of the residue-r
    sequence: it starts at text position r + j*p."""
    return AntiPowerHit(start=r + j * p, anti_period=p, order=k)


def find_all(
    text: Text,
    k: int,
    options: Optional[SearchOptions] = None,
    sink: Optional[HitSink] = None,
) -> int:
    """Report every order-k anti-power occurrence to the sink.

    Returns the total number of occurrences (which may exceed 2^32; the
    count is exact regardless). An empty text or k > n yields zero hits,
    not an error. Raises ValueError for k < 2.
    """
    if k < 2:
        raise ValueError(f"order k must be >= 2, got {k}")
    opts = options or SearchOptions()
    n = text.n
    p_hi = n // k
    if opts.max_anti_period is not None:
        p_hi = min(p_hi, opts.max_anti_period)
    p_lo = opts.min_anti_period
    if n == 0 or p_hi < p_lo:
        return 0
    if sink is None:
        sink = CountingSink()

    engine = _resolve_engine(opts.engine, n, p_hi)
    if engine == "fast":
        from . import _fastpath

        return _fastpath.run_search(text, k, p_lo, p_hi, sink)
    return _find_all_python(text, k, p_lo, p_hi, sink)


def _resolve_engine(engine: str, n: int, p_hi: int) -> str:
    if engine == "auto":
        if n * p_hi < _FAST_WORK_THRESHOLD:
            return "python"
        return "fast" if _fast_available() else "python"
    if engine == "fast" and not _fast_available():
        raise RuntimeError("fast engine requested but numba/numpy are not installed")
    return engine


def _fast_available() -> bool:
    try:
        from . import _fastpath  # noqa: F401
    except ImportError:
        return False
    return True


def _find_all_python(text: Text, k: int, p_lo: int, p_hi: int, sink: HitSink) -> int:
    n = text.n
    table = initial_names(text)
    # name values never exceed n, so one scanner serves every round
    scanner = WindowScanner(n + 1)
    total = 0
    want_positions = sink.wants_positions
    for p in range(1, p_hi + 1):
        if p > 1:
            table = extend(text, table)
        if p < p_lo:
            continue
        for r in range(p):
            meta = build_metastring(table, r)
            if want_positions:
                indices: list[int] = []
                count = scanner.distinct_k_windows(meta.values, k, indices.append)
                if count:
                    sink.on_hits(p, [r + j * p for j in indices])
            else:
                count = scanner.distinct_k_windows(meta.values, k, _ignore)
                if count:
                    sink.on_count(p, count)
            total += count
    return total


def _ignore(_: int) -> None:
    pass


def find_all_list(
    text: Text,
    k: int,
    options: Optional[SearchOptions] = None,
) -> list[AntiPowerHit]:
    """Materialized result list, in report order. For tests and small runs."""
    collector = CollectingSink()
    find_all(text, k, options, collector)
    return [AntiPowerHit(start, p, k) for start, p in collector.pairs]


def count_by_anti_period(text: Text, k: int, options: Optional[SearchOptions] = None) -> list[int]:
    """Occurrence counts indexed by anti-period, from 0 (unused) to n//k."""
    counter = CountingSink()
    find_all(text, k, options, counter)
    counts = [0] * (text.n // k + 1)
    for p, c in counter.by_period.items():
        counts[p] = c
    return counts
