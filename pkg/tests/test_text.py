import pytest
from hypothesis import given, strategies as st

from antipower.text import AntiPowerHit, Text, from_bytes, from_symbols, to_one_based_coords

from conftest import T


def test_from_bytes_two_letter():
    t = T("aba")
    assert t.symbols == (0, 1, 0)
    assert t.sigma == 2
    assert t.alphabet_map == (ord("a"), ord("b"))


def test_from_bytes_empty():
    t = from_bytes(b"")
    assert t.n == 0
    assert t.symbols == ()
    assert t.sigma == 0


def test_from_bytes_reference_string():
    t = T("aabababbbabb")
    assert t.n == 12
    assert t.sigma == 2
    assert t.symbols == (0, 0, 1, 0, 1, 0, 1, 1, 1, 0, 1, 1)


def test_remap_preserves_byte_order():
    t = from_bytes(b"ba")
    assert t.symbols == (1, 0)
    t = from_bytes(bytes([200, 10, 100]))
    assert t.symbols == (2, 0, 1)
    assert t.alphabet_map == (10, 100, 200)


def test_sigma_at_most_n_for_nonempty():
    for data in (b"x", b"abc", b"aabbcc", bytes(range(50))):
        t = from_bytes(data)
        assert 1 <= t.sigma <= t.n


def test_from_symbols():
    t = from_symbols([500, -3, 500, 1000])
    assert t.symbols == (1, 0, 1, 2)
    assert t.alphabet_map == (-3, 500, 1000)
    with pytest.raises(ValueError):
        t.to_bytes()


def test_invalid_construction():
    with pytest.raises(ValueError):
        Text(symbols=(0, 2), alphabet_map=(97, 98))
    with pytest.raises(ValueError):
        Text(symbols=(0,), alphabet_map=(98, 97))


@given(st.binary(max_size=200))
def test_round_trip(data):
    assert from_bytes(data).to_bytes() == data


@given(st.binary(min_size=2, max_size=40), st.data())
def test_remap_preserves_substring_order(data, draw):
    t = from_bytes(data)
    n = t.n
    i = draw.draw(st.integers(0, n - 1))
    j = draw.draw(st.integers(0, n - 1))
    length = draw.draw(st.integers(1, n - max(i, j)))
    original = data[i : i + length] < data[j : j + length]
    dense = t.symbols[i : i + length] < t.symbols[j : j + length]
    assert original == dense


def test_one_based_coords_examples():
    assert to_one_based_coords(AntiPowerHit(0, 3, 3)) == (1, 9)
    assert to_one_based_coords(AntiPowerHit(3, 3, 3)) == (4, 12)
    assert to_one_based_coords(AntiPowerHit(0, 1, 2)) == (1, 2)


def test_hit_validation():
    with pytest.raises(ValueError):
        AntiPowerHit(-1, 1, 2)
    with pytest.raises(ValueError):
        AntiPowerHit(0, 0, 2)
    with pytest.raises(ValueError):
        AntiPowerHit(0, 1, 1)
    hit = AntiPowerHit(2, 3, 4)
    assert hit.length == 12
    assert hit.end == 14
