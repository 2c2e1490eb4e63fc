"""Integer names for all length-p substrings, one refinement round at a time.

Round p assigns each start position i (with i + p <= n) a name in
1..num_names such that two positions share a name iff their length-p
substrings are equal. Names are the lexicographic rank of the substring
among the distinct length-p substrings, which makes them stable,
reproducible values rather than arbitrary identifiers.

Each round runs in O(n + sigma) time via two stable counting sorts:
first by the extension symbol, then by the previous round's name.
"""

from __future__ import annotations

from dataclasses import dataclass

from .text import Text


@dataclass(frozen=True, slots=True)
class NameTable:
    """Names for every length-p substring of one text.

    ``names[i]`` is the rank (1-based, dense) of the substring starting at
    i; ``order`` lists the start positions sorted by name, ties by
    position. A completed table is immutable and safe to share.
    """

    p: int
    names: list[int]
    num_names: int
    order: list[int]


def initial_names(text: Text) -> NameTable:
    """Round p=1: the name of a single symbol is its dense code plus one."""
    n = text.n
    if n == 0:
        raise ValueError("cannot name substrings of an empty text")
    syms = text.symbols
    names = [s + 1 for s in syms]
    order = _counting_sort(range(n), names, text.sigma + 1)
    return NameTable(p=1, names=names, num_names=text.sigma, order=order)


def extend(text: Text, table: NameTable) -> NameTable:
    """Derive the table for length p+1 from the table for length p.

    Positions are sorted stably by the symbol that extends each substring,
    then stably by the previous name, so the final order is by
    (previous name, extension symbol, position) which is lexicographic
    order of the length-(p+1) substrings. Runs in O(n + sigma).
    """
    n = text.n
    p = table.p
    if p + 1 > n:
        raise ValueError(f"cannot extend names to length {p + 1} on a text of length {n}")
    if len(table.names) != n - p + 1:
        raise ValueError("name table does not match text")

    syms = text.symbols
    names = table.names
    count = n - p  # positions 0..count-1 carry a length-(p+1) substring

    by_symbol = _counting_sort(range(count), syms, text.sigma, key_offset=p)
    by_name = _counting_sort(by_symbol, names, table.num_names + 1)

    new_names = [0] * count
    num = 0
    prev_name = -1
    prev_sym = -1
    for i in by_name:
        m = names[i]
        c = syms[i + p]
        if m != prev_name or c != prev_sym:
            num += 1
            prev_name = m
            prev_sym = c
        new_names[i] = num
    return NameTable(p=p + 1, names=new_names, num_names=num, order=by_name)


def _counting_sort(positions, keys, num_keys: int, key_offset: int = 0) -> list[int]:
    """Stable counting sort of position indices by keys[i + key_offset]."""
    counts = [0] * num_keys
    for i in positions:
        counts[keys[i + key_offset]] += 1
    total = 0
    for key, c in enumerate(counts):
        counts[key] = total
        total += c
    out = [0] * total
    for i in positions:
        key = keys[i + key_offset]
        out[counts[key]] = i
        counts[key] += 1
    return out
