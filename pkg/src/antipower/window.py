"""Sliding-window detection of runs of pairwise-distinct values.

The scanner keeps a last-seen table indexed by value, stamped with a
per-scan epoch so consecutive scans never pay an O(capacity) reset. This
matters when one search performs many short scans over sequences that
together cover only O(n) positions.
"""

from __future__ import annotations

from typing import Callable, Sequence


class WindowScanner:
    """Reusable scanner for integer sequences with values in [0, capacity).

    Not safe for concurrent use; independent scanners may run in parallel.
    """

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self.capacity = capacity
        self._last_epoch = [0] * capacity
        self._last_pos = [0] * capacity
        self._epoch = 0
        # (positions visited, total left-edge advance) of the latest scan
        self.last_scan_ops: tuple[int, int] = (0, 0)

    def longest_distinct(self, seq: Sequence[int]) -> tuple[int, int]:
        """Leftmost longest window of pairwise-distinct values.

        Returns (start, length); (0, 0) only for empty input.
        """
        best_start = 0
        best_len = 0

        def observe(x: int, y: int) -> None:
            nonlocal best_start, best_len
            if y - x + 1 > best_len:
                best_start = x
                best_len = y - x + 1

        self._scan(seq, observe)
        return best_start, best_len

    def distinct_k_windows(self, seq: Sequence[int], k: int, sink: Callable[[int], None]) -> int:
        """Report every index j such that seq[j, j+k) is pairwise distinct.

        Indices are reported in increasing order, each exactly once; the
        return value is the number of reports.
        """
        if k < 1:
            raise ValueError("window size k must be >= 1")
        count = 0

        def observe(x: int, y: int) -> None:
            nonlocal count
            if y - x + 1 >= k:
                sink(y - k + 1)
                count += 1

        self._scan(seq, observe)
        return count

    def _scan(self, seq: Sequence[int], observe: Callable[[int, int], None]) -> None:
        # Invariant: values in seq[x..y] are pairwise distinct. Each new y
        # either keeps x or jumps it past the previous occurrence of seq[y],
        # so x and y advance monotonically and the scan is O(len(seq)).
        self._epoch += 1
        epoch = self._epoch
        last_epoch = self._last_epoch
        last_pos = self._last_pos
        capacity = self.capacity
        x = 0
        x_advance = 0
        for y, v in enumerate(seq):
            if not 0 <= v < capacity:
                raise ValueError(f"value {v} out of scanner range [0, {capacity})")
            if last_epoch[v] == epoch and last_pos[v] >= x:
                x_advance += last_pos[v] + 1 - x
                x = last_pos[v] + 1
            last_epoch[v] = epoch
            last_pos[v] = y
            observe(x, y)
        self.last_scan_ops = (len(seq), x_advance)


def longest_distinct_substring(seq: Sequence[int]) -> tuple[int, int]:
    """One-shot leftmost longest pairwise-distinct window of seq."""
    scanner = WindowScanner(max(seq) + 1 if len(seq) else 1)
    return scanner.longest_distinct(seq)


def distinct_k_windows(seq: Sequence[int], k: int, sink: Callable[[int], None]) -> int:
    """One-shot enumeration of all length-k pairwise-distinct windows."""
    scanner = WindowScanner(max(seq) + 1 if len(seq) else 1)
    return scanner.distinct_k_windows(seq, k, sink)
