"""Cross-checks of the compiled engine against the pure-Python engine."""

import random

import pytest

pytest.importorskip("numba")

from antipower.oracle import enumerate_all
from antipower.search import CollectingSink, CountingSink, SearchOptions, find_all, find_all_list
from antipower.text import from_bytes, from_symbols

from conftest import random_text


def pairs(text, k, engine, **options):
    hits = find_all_list(text, k, SearchOptions(engine=engine, **options))
    return [(h.start, h.anti_period) for h in hits]


def test_engines_agree_on_random_inputs():
    rng = random.Random(51)
    for _ in range(150):
        text = random_text(rng, rng.randint(1, 80), rng.choice([1, 2, 3, 4, 5, 8, 26]))
        k = rng.randint(2, 8)
        assert pairs(text, k, "fast") == pairs(text, k, "python")


def test_engines_agree_with_period_filters():
    rng = random.Random(53)
    for _ in range(60):
        text = random_text(rng, rng.randint(4, 60), rng.choice([2, 3, 6]))
        k = rng.randint(2, 5)
        pmax = text.n // k
        if pmax < 1:
            continue
        lo = rng.randint(1, pmax)
        hi = rng.randint(lo, pmax)
        got = pairs(text, k, "fast", min_anti_period=lo, max_anti_period=hi)
        assert got == pairs(text, k, "python", min_anti_period=lo, max_anti_period=hi)


def test_fast_engine_matches_oracle_directly():
    rng = random.Random(57)
    for _ in range(40):
        text = random_text(rng, rng.randint(1, 50), rng.choice([2, 4]))
        k = rng.randint(2, 6)
        expected = sorted((h.start, h.anti_period) for h in enumerate_all(text, k))
        assert sorted(pairs(text, k, "fast")) == expected


def test_hash_renaming_path():
    # alphabets above the direct-address limit take the open-addressing path
    rng = random.Random(61)
    for sigma in (5, 30, 120):
        text = random_text(rng, 64, sigma)
        assert pairs(text, 3, "fast") == pairs(text, 3, "python")


def test_all_distinct_saturation_path():
    text = from_symbols(range(300))
    for k in (2, 3, 7):
        assert pairs(text, k, "fast") == pairs(text, k, "python")


def test_unary_never_saturates():
    text = from_bytes(b"a" * 120)
    assert pairs(text, 2, "fast") == []


def test_count_only_equals_collected_count():
    rng = random.Random(67)
    for _ in range(25):
        text = random_text(rng, rng.randint(10, 200), 2)
        k = rng.randint(2, 4)
        counter = CountingSink()
        total = find_all(text, k, SearchOptions(engine="fast"), counter)
        collector = CollectingSink()
        assert find_all(text, k, SearchOptions(engine="fast"), collector) == total
        assert counter.total == total == len(collector.pairs)


def test_moderate_input_counts_agree():
    rng = random.Random(71)
    text = random_text(rng, 5000, 2)
    fast = find_all(text, 5, SearchOptions(engine="fast"))
    slow = find_all(text, 5, SearchOptions(engine="python"))
    assert fast == slow
