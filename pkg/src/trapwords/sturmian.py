"""Balance, minimal pathological pairs, and central words."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, product
from math import gcd

from .words import (
    InvariantViolation,
    PreconditionError,
    is_palindrome,
    periods,
)


def _window_counts(w: str, n: int, prefix: list[int]) -> list[int]:
    return [prefix[i + n] - prefix[i] for i in range(len(w) - n + 1)]


def _a_prefix_sums(w: str) -> list[int]:
    return [0, *accumulate(c == "a" for c in w)]


def _first_violating_length(w: str) -> int | None:
    # Window a-counts of one length form an integer interval (sliding changes
    # the count by at most one), so max - min >= 2 detects imbalance.
    prefix = _a_prefix_sums(w)
    for n in range(2, len(w)):
        counts = _window_counts(w, n, prefix)
        if max(counts) - min(counts) >= 2:
            return n
    return None


def is_balanced(w: str) -> bool:
    return _first_violating_length(w) is None


def is_finite_sturmian(w: str) -> bool:
    """A binary word is a factor of some Sturmian word iff it is balanced."""
    return is_balanced(w)


@dataclass(frozen=True)
class PathologicalDecomposition:
    """Minimal pathological pair ``f = xux``, ``g = yuy``.

    ``f`` is the member of the pair that occurs first in the host word;
    ``f_position`` is its first occurrence and ``g_position`` the first
    occurrence of ``g``, which lies entirely after ``f``.
    """

    f: str
    g: str
    u: str
    x: str
    y: str
    f_position: int
    g_position: int


def minimal_pathological_pair(w: str) -> PathologicalDecomposition | None:
    n = _first_violating_length(w)
    if n is None:
        return None
    prefix = _a_prefix_sums(w)
    counts = _window_counts(w, n, prefix)
    hi, lo = max(counts), min(counts)
    heavy = {w[i : i + n] for i, c in enumerate(counts) if c == hi}
    light = {w[i : i + n] for i, c in enumerate(counts) if c == lo}
    if len(heavy) != 1 or len(light) != 1:
        raise InvariantViolation(f"minimal pathological pair of {w!r} is not unique")
    (aua,), (bub,) = heavy, light
    if aua[1:-1] != bub[1:-1] or aua[0] != aua[-1] or bub[0] != bub[-1]:
        raise InvariantViolation(f"minimal pair ({aua}, {bub}) of {w!r} is not of the form (xux, yuy)")
    if w.find(aua) < w.find(bub):
        f, g = aua, bub
    else:
        f, g = bub, aua
    f_pos, g_pos = w.find(f), w.find(g)
    if g_pos < f_pos + len(f):
        raise InvariantViolation(f"minimal pair of {w!r} overlaps")
    return PathologicalDecomposition(
        f=f, g=g, u=f[1:-1], x=f[0], y=g[0], f_position=f_pos, g_position=g_pos
    )


def central_root(w: str) -> str:
    pair = minimal_pathological_pair(w)
    if pair is None:
        raise PreconditionError(f"{w!r} is balanced and has no central root")
    return pair.u


def is_central(w: str) -> bool:
    """True iff ``w`` has coprime periods ``p``, ``q`` with ``|w| = p + q - 2``.

    Periods up to ``|w| + 1`` are admitted (those ``>= |w|`` hold vacuously),
    which makes every letter power central.
    """
    n = len(w)
    ps = set(periods(w, limit=n + 1))
    return any(gcd(p, n + 2 - p) == 1 and (n + 2 - p) in ps for p in ps)


def is_central_via_palindrome_extension(w: str) -> bool:
    return is_palindrome(w) and is_balanced("a" + w + "a") and is_balanced("b" + w + "b")


@dataclass(frozen=True)
class CentralDecomposition:
    """Either ``letter ** exponent`` or ``u1 + "ab" + u2 == u2 + "ba" + u1``."""

    kind: str
    letter: str | None = None
    exponent: int | None = None
    u1: str | None = None
    u2: str | None = None
    x: str | None = None
    y: str | None = None


def central_decomposition(w: str) -> CentralDecomposition:
    if not is_central(w):
        raise PreconditionError(f"{w!r} is not a central word")
    if not w:
        return CentralDecomposition(kind="letter-power", letter="a", exponent=0)
    if len(set(w)) == 1:
        return CentralDecomposition(kind="letter-power", letter=w[0], exponent=len(w))
    splits = [
        i
        for i in range(len(w) - 1)
        if w[i : i + 2] == "ab" and w == w[i + 2 :] + "ba" + w[:i]
    ]
    if len(splits) != 1:
        raise InvariantViolation(f"central word {w!r} has {len(splits)} cross decompositions")
    i = splits[0]
    u1, u2 = w[:i], w[i + 2 :]
    if not (is_central(u1) and is_central(u2)):
        raise InvariantViolation(f"cross decomposition of {w!r} has non-central parts")
    return CentralDecomposition(kind="cross", u1=u1, u2=u2, x="a", y="b")


def central_words(n: int) -> list[str]:
    """All central words of length ``n`` in lexicographic order."""
    if n < 0:
        raise ValueError(f"length must be non-negative, got {n}")
    return [w for w in map("".join, product("ab", repeat=n)) if is_central(w)]
