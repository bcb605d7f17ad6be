import itertools

import pytest
from hypothesis import given, strategies as st

from enumcodec import (
    BINARY,
    DECIMAL,
    Alphabet,
    InvalidStringError,
    enumerate_strings,
    int_to_nat,
    nat_to_int,
    shortlex_index,
    shortlex_string,
    transcode,
)
from oracles import shortlex_listing

MW = Alphabet("mw")
ALPHABETS = [Alphabet("a"), BINARY, Alphabet("abc"), Alphabet("wxyz")]


@pytest.mark.parametrize("text,alphabet,expected", [
    ("", BINARY, 0),
    ("10", BINARY, 5),
    ("50", DECIMAL, 61),
])
def test_shortlex_index_examples(text, alphabet, expected):
    assert shortlex_index(text, alphabet) == expected


@pytest.mark.parametrize("n,alphabet,expected", [
    (0, BINARY, ""),
    (6, BINARY, "11"),
    (11, DECIMAL, "00"),
])
def test_shortlex_string_examples(n, alphabet, expected):
    assert str(shortlex_string(n, alphabet)) == expected


def test_examples_agree_with_enumeration_oracle():
    binary = shortlex_listing("01", 3)
    assert binary.index("10") == 5 and binary[6] == "11"
    decimal = shortlex_listing("0123456789", 2)
    assert decimal.index("50") == 61 and decimal[11] == "00"


def test_matches_positional_formula():
    # sum of (digit_i + 1) * k^(m - i)
    s = "2031"
    k = 4
    expected = sum((int(c) + 1) * k ** (len(s) - i) for i, c in enumerate(s, start=1))
    assert shortlex_index(s, Alphabet("0123")) == expected


def test_invalid_symbol():
    with pytest.raises(InvalidStringError):
        shortlex_index("012", BINARY)
    with pytest.raises(InvalidStringError):
        BINARY.string("2")


def test_leading_zeros_are_significant():
    assert len({shortlex_index("0" * i, DECIMAL) for i in range(6)}) == 6


@pytest.mark.parametrize("alphabet,limit,expected", [
    (BINARY, 3, ["", "0", "1"]),
    (DECIMAL, 1, [""]),
    (MW, 4, ["", "m", "w", "mm"]),
])
def test_enumerate_examples(alphabet, limit, expected):
    assert [str(s) for s in enumerate_strings(alphabet, limit)] == expected


def test_enumerate_is_unbounded_without_limit():
    stream = enumerate_strings(BINARY)
    assert [str(s) for s in itertools.islice(stream, 7)] == ["", "0", "1", "00", "01", "10", "11"]


@pytest.mark.parametrize("alphabet", ALPHABETS + [DECIMAL], ids=lambda a: "".join(a.symbols))
def test_enumerate_covers_index_range(alphabet):
    n = 5000
    strings = list(enumerate_strings(alphabet, n))
    assert len(set(strings)) == n
    assert sorted(shortlex_index(s) for s in strings) == list(range(n))


@pytest.mark.parametrize("alphabet", ALPHABETS, ids=lambda a: "".join(a.symbols))
def test_round_trip_and_order_exhaustive(alphabet):
    listing = shortlex_listing(alphabet.symbols, 8 if len(alphabet) < 4 else 7)
    for i, s in enumerate(listing):
        n = shortlex_index(s, alphabet)
        assert n == i
        assert str(shortlex_string(n, alphabet)) == s


@pytest.mark.parametrize("alphabet", [BINARY, DECIMAL], ids=["binary", "decimal"])
def test_round_trip_integers(alphabet):
    for n in range(2 ** 16):
        assert shortlex_index(shortlex_string(n, alphabet)) == n


@given(st.text(alphabet="0123456789", max_size=300))
def test_decimal_round_trip_long(s):
    assert str(shortlex_string(shortlex_index(s, DECIMAL), DECIMAL)) == s


@given(st.integers(min_value=0, max_value=10 ** 400))
def test_k_to_s_chain(n):
    d = shortlex_string(n, DECIMAL)
    b = transcode(d, BINARY)
    assert set(str(b)) <= {"0", "1"}
    assert transcode(b, DECIMAL) == d


def test_multi_character_symbols():
    a = Alphabet(["ab", "c", "de"])
    s = a.string(["de", "ab"])
    assert shortlex_string(shortlex_index(s), a) == s


def test_alphabet_rejects_duplicates_and_empty():
    with pytest.raises(ValueError):
        Alphabet("aba")
    with pytest.raises(ValueError):
        Alphabet("")


@pytest.mark.parametrize("n,z", [(0, 0), (1, 1), (4, -2), (2, -1), (3, 2)])
def test_zigzag_examples(n, z):
    assert nat_to_int(n) == z
    assert int_to_nat(z) == n


def test_zigzag_bijective_range():
    images = [nat_to_int(n) for n in range(10 ** 5)]
    assert all(int_to_nat(z) == n for n, z in enumerate(images))
    assert set(images) == set(range(-49999, 50001))
