import pytest

import oracles
from trapwords.sturmian import (
    central_decomposition,
    central_root,
    central_words,
    is_balanced,
    is_central,
    is_central_via_palindrome_extension,
    is_finite_sturmian,
    minimal_pathological_pair,
)
from trapwords.trapezoidal import is_closed
from trapwords.words import PreconditionError, is_palindrome, period_data


@pytest.mark.parametrize("w, expected", [("aaabab", False), ("aaababa", False), ("abaababa", True)])
def test_is_balanced(w, expected):
    assert is_balanced(w) is expected
    assert is_finite_sturmian(w) is expected


def test_balance_against_oracle():
    for w in oracles.words_up_to(11, start=0):
        assert is_balanced(w) == oracles.is_balanced(w), w


@pytest.mark.parametrize(
    "w, f, g, u",
    [
        ("aaababa", "aaa", "bab", "a"),
        ("aababbabab", "aa", "bb", ""),
        ("aaaabaabab", "aaa", "bab", "a"),
        ("aabaababab", "aabaa", "babab", "aba"),
        ("babababaabaa", "babab", "aabaa", "aba"),
    ],
)
def test_minimal_pathological_pair(w, f, g, u):
    pair = minimal_pathological_pair(w)
    assert (pair.f, pair.g, pair.u) == (f, g, u)
    assert (pair.x, pair.y) == (f[0], g[0])
    assert central_root(w) == u


def test_balanced_word_has_no_pair():
    assert minimal_pathological_pair("abab") is None
    with pytest.raises(PreconditionError):
        central_root("abab")


def test_pathological_pair_structure_exhaustive():
    for w in oracles.words_up_to(12):
        pair = minimal_pathological_pair(w)
        naive = oracles.minimal_pathological_pairs(w)
        if pair is None:
            assert not naive
            continue
        # every minimal pair has the same interior: the central root is unique
        assert {(s[1:-1], t[1:-1]) for s, t in naive} == {(pair.u, pair.u)}
        assert {frozenset(p) for p in naive} == {frozenset((pair.f, pair.g))}
        assert pair.f == pair.x + pair.u + pair.x and pair.g == pair.y + pair.u + pair.y
        assert pair.x != pair.y
        assert is_palindrome(pair.u) and is_central(pair.u)
        assert w[pair.f_position :].startswith(pair.f) and w[pair.g_position :].startswith(pair.g)
        assert pair.f_position + len(pair.f) <= pair.g_position
        assert pair.f_position == w.find(pair.f) < w.find(pair.g)


@pytest.mark.parametrize(
    "w, expected",
    [("aba", True), ("", True), ("a", True), ("aaaa", True), ("bbbbb", True), ("ab", False), ("abba", False)],
)
def test_is_central(w, expected):
    assert is_central(w) is expected
    assert is_central_via_palindrome_extension(w) is expected


def _structural_central(w):
    if len(set(w)) <= 1:
        return True
    return any(
        w[i : i + 2] == "ab" and w == w[i + 2 :] + "ba" + w[:i] for i in range(len(w) - 1)
    )


def test_central_characterizations_agree():
    for w in oracles.words_up_to(12, start=0):
        c = is_central(w)
        assert c == oracles.is_central(w)
        assert c == is_central_via_palindrome_extension(w), w
        assert c == _structural_central(w), w


def test_central_decomposition():
    d = central_decomposition("aabaa")
    assert d.kind == "cross"
    assert (d.u1, d.x, d.y, d.u2) == ("a", "a", "b", "aa")
    d = central_decomposition("bbb")
    assert (d.kind, d.letter, d.exponent) == ("letter-power", "b", 3)
    d = central_decomposition("")
    assert (d.kind, d.letter, d.exponent) == ("letter-power", "a", 0)
    with pytest.raises(PreconditionError):
        central_decomposition("ab")


def test_central_decomposition_exhaustive():
    for n in range(13):
        for w in central_words(n):
            d = central_decomposition(w)
            if d.kind == "cross":
                assert w == d.u1 + "ab" + d.u2 == d.u2 + "ba" + d.u1
                assert is_central(d.u1) and is_central(d.u2)
            else:
                assert w == d.letter * d.exponent


def test_central_words_small():
    assert central_words(0) == [""]
    assert central_words(1) == ["a", "b"]
    assert central_words(3) == ["aaa", "aba", "bab", "bbb"]


def test_central_word_counts():
    for n in range(16):
        assert len(central_words(n)) == oracles.phi(n + 2)


def test_central_words_are_closed_palindromes():
    for n in range(15):
        for w in central_words(n):
            assert is_palindrome(w) and is_closed(w)


def test_fractional_root_powers():
    for w in oracles.words_up_to(10):
        z = period_data(w).fractional_root
        if is_balanced(w):
            assert all(is_balanced(z * k) for k in (1, 2, 3))
        else:
            assert not is_balanced(z * 3)


def test_pathological_pair_structure_to_14():
    for n in (13, 14):
        for w in oracles.words(n):
            pair = minimal_pathological_pair(w)
            if pair is None:
                continue
            assert pair.x != pair.y and is_central(pair.u)
            assert pair.f_position + len(pair.f) <= pair.g_position
