"""Compiled engine for large searches.

Same algorithm as the pure-Python path (naming refinement per round plus
per-residue distinct-window scans), with the per-round state held in
preallocated numpy arrays and the inner loops JIT-compiled. All scratch
tables are stamp-cleared (an entry is live only if its stamp matches the
current round or scan), so no table is ever reset wholesale.

Total time stays O(n^2/k); working memory is a fixed number of O(n)
arrays allocated once per search.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .search import HitSink
from .text import Text

# direct-address renaming table is sigma * n entries; past this alphabet
# size the open-addressing path is leaner
_DIRECT_SIGMA_LIMIT = 4

_HASH_MULT = np.uint64(0x9E3779B97F4A7C15)


@njit(cache=True)
def _initial_names(sym, names, n):
    for i in range(n):
        names[i] = sym[i] + 1


@njit(cache=True)
def _extend_direct(sym, p, n, sigma, names, new_names, table, mark):
    """Rename length-(p+1) substrings via a direct-address table keyed by
    (previous name, extension symbol). Entries <= mark are stale."""
    count = n - p
    num = 0
    for i in range(count):
        key = (names[i] - 1) * sigma + sym[i + p]
        v = table[key]
        if v <= mark:
            num += 1
            v = mark + num
            table[key] = v
        new_names[i] = v - mark
    return num, mark + num


@njit(cache=True)
def _extend_hash(sym, p, n, sigma, names, new_names, slot_stamp, slot_key, slot_name, stamp, mask, shift):
    """Open-addressing variant for alphabets too large to direct-address."""
    count = n - p
    num = 0
    for i in range(count):
        key = names[i] * sigma + sym[i + p]
        h = (np.uint64(key) * _HASH_MULT) >> shift
        while True:
            s = np.int64(h)
            if slot_stamp[s] != stamp:
                slot_stamp[s] = stamp
                slot_key[s] = key
                num += 1
                slot_name[s] = num
                new_names[i] = num
                break
            if slot_key[s] == key:
                new_names[i] = slot_name[s]
                break
            h = (h + np.uint64(1)) & mask
    return num


@njit(cache=True)
def _fill_identity(names, count):
    for i in range(count):
        names[i] = i + 1


@njit(cache=True)
def _scan_round(names, p, k, name_count, last_stamp, last_index, scan_id, out, collect):
    """Scan every residue class of round p for k-windows of distinct names.

    Window starts are appended to out (when collect is true) in
    (residue, index) order; returns the hit count and the updated scan id.
    """
    total = 0
    for r in range(p):
        if r >= name_count:
            break
        scan_id += 1
        x = 0
        length = (name_count - 1 - r) // p + 1
        for j in range(length):
            m = names[r + j * p]
            if last_stamp[m] == scan_id:
                prev = last_index[m]
                if prev >= x:
                    x = prev + 1
            last_stamp[m] = scan_id
            last_index[m] = j
            if j - x + 1 >= k:
                if collect:
                    out[total] = r + (j - k + 1) * p
                total += 1
    return total, scan_id


def run_search(text: Text, k: int, p_lo: int, p_hi: int, sink: HitSink) -> int:
    """Drive rounds p = 1..p_hi, reporting rounds >= p_lo to the sink."""
    n = text.n
    sigma = text.sigma
    sym = np.array(text.symbols, dtype=np.int64)
    names = np.empty(n, dtype=np.int64)
    new_names = np.empty(n, dtype=np.int64)
    last_stamp = np.zeros(n + 2, dtype=np.int64)
    last_index = np.zeros(n + 2, dtype=np.int64)
    collect = bool(sink.wants_positions)
    out = np.empty(n if collect else 1, dtype=np.int64)

    use_direct = sigma <= _DIRECT_SIGMA_LIMIT
    if use_direct:
        rename_table = np.zeros(sigma * (n + 1), dtype=np.int64)
        slot_stamp = slot_key = slot_name = np.empty(1, dtype=np.int64)
        mask = shift = np.uint64(0)
    else:
        bits = max(4, (2 * n - 1).bit_length())
        rename_table = np.empty(1, dtype=np.int64)
        slot_stamp = np.zeros(1 << bits, dtype=np.int64)
        slot_key = np.empty(1 << bits, dtype=np.int64)
        slot_name = np.empty(1 << bits, dtype=np.int64)
        mask = np.uint64((1 << bits) - 1)
        shift = np.uint64(64 - bits)

    _initial_names(sym, names, n)
    num_names = sigma
    mark = 0
    stamp = 0
    scan_id = 0
    all_distinct = False
    total = 0

    for p in range(1, p_hi + 1):
        name_count = n - p + 1
        if p >= p_lo:
            hits, scan_id = _scan_round(
                names, p, k, name_count, last_stamp, last_index, scan_id, out, collect
            )
            hits = int(hits)
            if hits:
                if collect:
                    sink.on_hits(p, out[:hits].copy())
                else:
                    sink.on_count(p, hits)
                total += hits
        if p == p_hi:
            break
        # prepare names for round p + 1
        next_count = n - p
        if all_distinct:
            continue  # identity names remain valid as the range shrinks
        if num_names == name_count:
            # all length-p substrings distinct; longer ones stay distinct,
            # so any injective naming works from here on
            all_distinct = True
            _fill_identity(names, next_count)
            num_names = next_count
            continue
        if use_direct:
            num_names, mark = _extend_direct(sym, p, n, sigma, names, new_names, rename_table, mark)
        else:
            stamp += 1
            num_names = _extend_hash(
                sym, p, n, sigma, names, new_names, slot_stamp, slot_key, slot_name, stamp, mask, shift
            )
        names, new_names = new_names, names
    return total
