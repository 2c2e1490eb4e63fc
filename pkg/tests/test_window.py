import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from antipower.window import WindowScanner, distinct_k_windows, longest_distinct_substring

from conftest import brute_distinct_windows, brute_longest_distinct


def collect(seq, k, scanner=None):
    out = []
    if scanner is None:
        distinct_k_windows(seq, k, out.append)
    else:
        scanner.distinct_k_windows(seq, k, out.append)
    return out


def test_longest_examples():
    assert longest_distinct_substring([1, 2, 6, 3]) == (0, 4)
    assert longest_distinct_substring([7, 7, 7]) == (0, 1)
    assert longest_distinct_substring([2, 2, 2, 4, 2]) == (2, 2)
    assert longest_distinct_substring([]) == (0, 0)


def test_k_window_examples():
    assert collect([1, 2, 6, 3], 3) == [0, 1]
    assert collect([2, 2, 2, 4, 2], 3) == []
    assert collect([4, 3, 4], 3) == []


def test_window_longer_than_sequence():
    assert collect([1, 2], 5) == []


def test_invalid_k():
    with pytest.raises(ValueError):
        distinct_k_windows([1, 2], 0, lambda j: None)


def test_value_out_of_range():
    scanner = WindowScanner(4)
    with pytest.raises(ValueError):
        scanner.distinct_k_windows([1, 9], 2, lambda j: None)
    with pytest.raises(ValueError):
        scanner.longest_distinct([-1])


def test_exhaustive_small():
    for length in range(0, 8):
        for seq in itertools.product(range(3), repeat=length):
            for k in range(1, 5):
                assert collect(list(seq), k) == brute_distinct_windows(seq, k)
            assert longest_distinct_substring(list(seq)) == brute_longest_distinct(seq)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 6), max_size=20), st.integers(1, 6))
def test_matches_brute_force(seq, k):
    assert collect(seq, k) == brute_distinct_windows(seq, k)
    assert longest_distinct_substring(seq) == brute_longest_distinct(seq)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 5), max_size=18), st.integers(1, 5))
def test_subwindows_of_reports_are_distinct(seq, k):
    # a window of k+1 distinct values contains two distinct k-windows
    wide = collect(seq, k + 1)
    narrow = set(collect(seq, k))
    for j in wide:
        assert j in narrow
        assert j + 1 in narrow


def test_report_count_bound():
    rng = random.Random(3)
    for _ in range(50):
        seq = [rng.randrange(5) for _ in range(rng.randint(0, 30))]
        k = rng.randint(1, 6)
        reports = collect(seq, k)
        assert len(reports) <= max(0, len(seq) - k + 1)
        assert reports == sorted(set(reports))


def test_scanner_reuse_without_reset():
    scanner = WindowScanner(100)
    first = collect([1, 2, 3, 1, 2], 2, scanner)
    # a second scan over different data must not see stale entries
    second = collect([5, 5, 5], 2, scanner)
    third = collect([1, 2, 3, 1, 2], 2, scanner)
    assert first == third == [0, 1, 2, 3]
    assert second == []


def test_scan_is_linear():
    scanner = WindowScanner(10)
    rng = random.Random(9)
    for _ in range(20):
        seq = [rng.randrange(4) for _ in range(rng.randint(0, 200))]
        scanner.distinct_k_windows(seq, 3, lambda j: None)
        visited, left_advance = scanner.last_scan_ops
        assert visited == len(seq)
        assert left_advance <= len(seq)
