import pytest
from hypothesis import given, strategies as st

import oracles
from trapwords.words import (
    WordError,
    borders,
    factor_complexity,
    factors_of_length,
    has_internal_occurrence,
    is_palindrome,
    is_primitive,
    longest_repeated_prefix,
    longest_repeated_suffix,
    occurrences,
    palindromic_factors,
    parse_word,
    period_data,
    periods,
    reversal,
)

binary = st.text(alphabet="ab", max_size=40)


def test_parse_word():
    assert parse_word("abba") == "abba"
    assert parse_word("") == ""
    assert parse_word("eps") == ""
    with pytest.raises(WordError) as exc:
        parse_word("abca")
    assert exc.value.char == "c" and exc.value.position == 2


@pytest.mark.parametrize(
    "w, n, expected",
    [
        ("aababba", 2, {"aa", "ab", "ba", "bb"}),
        ("aababba", 0, {""}),
        ("aaababa", 3, {"aaa", "aab", "aba", "bab"}),
        ("ab", 3, set()),
    ],
)
def test_factors_of_length(w, n, expected):
    assert factors_of_length(w, n) == expected


def test_factors_of_negative_length():
    with pytest.raises(ValueError):
        factors_of_length("ab", -1)


@pytest.mark.parametrize(
    "w, expected",
    [
        ("aaababa", [1, 2, 3, 4, 4, 3, 2, 1]),
        ("aaaa", [1, 1, 1, 1, 1]),
        ("aabbaa", [1, 2, 4, 4, 3, 2, 1]),
        ("", [1]),
    ],
)
def test_factor_complexity(w, expected):
    assert factor_complexity(w) == expected


@pytest.mark.parametrize(
    "host, factor, expected",
    [
        ("aababaaba", "aaba", (0, 5)),
        ("aaa", "a", (0, 1, 2)),
        ("ab", "", (0, 1, 2)),
        ("ab", "aba", ()),
    ],
)
def test_occurrences(host, factor, expected):
    assert occurrences(host, factor).positions == expected


def test_occurrences_match_naive_scan():
    for host in oracles.words_up_to(9, start=0):
        for factor in ["", "a", "ab", "aba", "bb", "abab", "baab"]:
            assert list(occurrences(host, factor).positions) == oracles.positions(host, factor)


def test_reversal_and_palindromes():
    assert reversal("aab") == "baa"
    assert reversal("") == ""
    assert reversal("aba") == "aba"
    assert is_palindrome("abba") and not is_palindrome("ab") and is_palindrome("")


@pytest.mark.parametrize(
    "w, p, root",
    [("aababba", 6, "aababb"), ("bab", 2, "ba"), ("aaa", 1, "a")],
)
def test_period_data(w, p, root):
    d = period_data(w)
    assert (d.period, d.fractional_root) == (p, root)
    assert d.period == len(w) - len(d.longest_border)


def test_period_data_rejects_empty():
    with pytest.raises(ValueError):
        period_data("")


def test_is_primitive():
    assert not is_primitive("abab")
    assert is_primitive("aba")
    assert is_primitive("aabab")
    with pytest.raises(ValueError):
        is_primitive("")


@pytest.mark.parametrize(
    "w, expected",
    [
        ("abaababaaba", ["", "a", "aba", "abaaba"]),
        ("ab", [""]),
        ("aa", ["", "a"]),
    ],
)
def test_borders(w, expected):
    assert borders(w) == expected


def test_palindromic_factors_examples():
    assert palindromic_factors("aabbaa") == {"", "a", "b", "aa", "bb", "abba", "aabbaa"}
    assert len(palindromic_factors("aaababbaabbabaaa")) == 16
    assert palindromic_factors("") == {""}


def test_exhaustive_against_oracles():
    for w in oracles.words_up_to(10, start=0):
        assert factor_complexity(w) == oracles.complexity(w)
        assert palindromic_factors(w) == oracles.palindromes(w)
        assert borders(w) == oracles.borders(w) if w else borders(w) == []
        if w:
            assert period_data(w).period == oracles.smallest_period(w)
            assert periods(w) == [p for p in range(1, len(w) + 1) if oracles.is_period(w, p)]


def test_repeated_prefix_suffix_against_oracle():
    for w in oracles.words_up_to(10):
        h, k = longest_repeated_prefix(w), longest_repeated_suffix(w)
        H, K, _, _ = oracles.hklr(w)
        assert (len(h) + 1, len(k) + 1) == (H, K)


@given(binary)
def test_complexity_bounds(w):
    f = factor_complexity(w)
    for n in range(len(w)):
        assert f[n + 1] <= 2 * f[n]
    for n in range(len(w) + 1):
        assert f[n] <= min(2**n, len(w) - n + 1)


@given(binary)
def test_reversal_involution_and_complexity(w):
    assert reversal(reversal(w)) == w
    assert factor_complexity(reversal(w)) == factor_complexity(w)


@given(binary.filter(bool))
def test_every_border_gives_a_period(w):
    for b in borders(w):
        assert len(w) - len(b) in periods(w)


@given(binary)
def test_richness_bound(w):
    assert len(palindromic_factors(w)) <= len(w) + 1


@given(binary, binary)
def test_internal_occurrence(w, u):
    pos = oracles.positions(w, u)
    assert has_internal_occurrence(w, u) == any(0 < p < len(w) - len(u) for p in pos)
