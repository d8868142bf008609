"""Binary words and the basic stringology primitives.

Words are plain ``str`` values over the alphabet ``"ab"``; the empty string is
the empty word.  Strings are immutable and hashable, so they serve directly as
factor-set members and dictionary keys.  Use :func:`parse_word` at any trust
boundary (CLI, files) to validate input.
"""

from __future__ import annotations

from dataclasses import dataclass

ALPHABET = "ab"
EMPTY = ""


class WordError(ValueError):
    """Raised when text cannot be read as a word over ``{a, b}``."""

    def __init__(self, message: str, char: str | None = None, position: int | None = None):
        super().__init__(message)
        self.char = char
        self.position = position


class PreconditionError(ValueError):
    """An operation was called outside its domain (e.g. a balanced word where
    an unbalanced one is required)."""


class InvariantViolation(RuntimeError):
    """An internal cross-check failed. Signals a bug, never bad input."""


def parse_word(text: str) -> str:
    """Validate ``text`` as a binary word; ``"eps"`` denotes the empty word."""
    if text == "eps":
        return EMPTY
    for i, c in enumerate(text):
        if c not in ALPHABET:
            raise WordError(
                f"invalid character {c!r} at position {i}: words are over {{a, b}}",
                char=c,
                position=i,
            )
    return text


def complement(w: str) -> str:
    """Exchange the two letters."""
    return w.translate(str.maketrans("ab", "ba"))


def other(x: str) -> str:
    return "b" if x == "a" else "a"


def reversal(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def _require_nonempty(w: str, what: str) -> None:
    if not w:
        raise ValueError(f"{what} is undefined for the empty word")


def factors_of_length(w: str, n: int) -> set[str]:
    """Distinct factors of ``w`` of length ``n``; ``{""}`` for ``n == 0``."""
    if n < 0:
        raise ValueError(f"factor length must be non-negative, got {n}")
    if n > len(w):
        return set()
    return {w[i : i + n] for i in range(len(w) - n + 1)}


def factors(w: str) -> set[str]:
    """All distinct factors of ``w`` including the empty word."""
    return {w[i:j] for i in range(len(w) + 1) for j in range(i, len(w) + 1)}


def factor_complexity(w: str) -> list[int]:
    """The sequence ``f_w(0), ..., f_w(|w|)``."""
    return [len(factors_of_length(w, n)) for n in range(len(w) + 1)]


@dataclass(frozen=True)
class OccurrenceList:
    factor: str
    positions: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.positions)


def occurrences(host: str, factor: str) -> OccurrenceList:
    """All (possibly overlapping) start positions of ``factor`` in ``host``."""
    positions = []
    if len(factor) <= len(host):
        i = host.find(factor)
        while i != -1:
            positions.append(i)
            i = host.find(factor, i + 1)
    return OccurrenceList(factor, tuple(positions))


def has_internal_occurrence(w: str, u: str) -> bool:
    """True iff ``u`` occurs in ``w`` at some position other than prefix/suffix."""
    last = len(w) - len(u)
    if last < 2:
        return False
    i = w.find(u, 1)
    return i != -1 and i < last


def _failure_function(w: str) -> list[int]:
    fail = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    return fail


def borders(w: str) -> list[str]:
    """Borders of ``w`` (proper prefixes that are also suffixes), shortest first."""
    if not w:
        return []
    fail = _failure_function(w)
    lengths = []
    k = fail[-1]
    while k:
        lengths.append(k)
        k = fail[k - 1]
    return [EMPTY] + [w[:k] for k in reversed(lengths)]


def longest_border(w: str) -> str:
    _require_nonempty(w, "the longest border")
    return w[: _failure_function(w)[-1]]


@dataclass(frozen=True)
class PeriodData:
    period: int
    fractional_root: str
    longest_border: str


def period_data(w: str) -> PeriodData:
    border = longest_border(w)
    p = len(w) - len(border)
    return PeriodData(period=p, fractional_root=w[:p], longest_border=border)


def period(w: str) -> int:
    return period_data(w).period


def periods(w: str, limit: int | None = None) -> list[int]:
    """All periods ``p`` with ``1 <= p <= limit`` (default ``|w|``).

    Values ``p >= |w|`` are periods vacuously.
    """
    if limit is None:
        limit = len(w)
    return [p for p in range(1, limit + 1) if w[p:] == w[: max(len(w) - p, 0)]]


def is_primitive(w: str) -> bool:
    _require_nonempty(w, "primitivity")
    p = period(w)
    return not (p < len(w) and len(w) % p == 0)


def palindromic_factors(w: str) -> set[str]:
    """All distinct palindromic factors of ``w``, including the empty word."""
    found = {EMPTY}
    n = len(w)
    for center in range(2 * n - 1):
        lo = center // 2
        hi = lo + center % 2
        while lo >= 0 and hi < n and w[lo] == w[hi]:
            found.add(w[lo : hi + 1])
            lo -= 1
            hi += 1
    return found


def longest_repeated_prefix(w: str) -> str:
    """Longest prefix of ``w`` that occurs at least twice (``h_w``)."""
    # Repeatedness is monotone in the prefix length, so bisect.
    lo, hi = 0, len(w) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if w.find(w[:mid], 1) != -1:
            lo = mid
        else:
            hi = mid - 1
    return w[: max(lo, 0)]


def longest_repeated_suffix(w: str) -> str:
    """Longest suffix of ``w`` that occurs at least twice (``k_w``)."""
    return reversal(longest_repeated_prefix(reversal(w)))
