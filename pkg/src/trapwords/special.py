"""Left/right/bispecial factors and the parameters H, K, L, R of a word."""

from __future__ import annotations

from dataclasses import dataclass

from .words import (
    factors,
    longest_repeated_prefix,
    longest_repeated_suffix,
)


def _by_length(ws) -> list[str]:
    return sorted(ws, key=lambda u: (len(u), u))


@dataclass(frozen=True)
class SpecialFactors:
    left: list[str]
    right: list[str]
    bispecial: list[str]


def left_special_factors(w: str, facts: set[str] | None = None) -> list[str]:
    if facts is None:
        facts = factors(w)
    return _by_length(u for u in facts if "a" + u in facts and "b" + u in facts)


def right_special_factors(w: str, facts: set[str] | None = None) -> list[str]:
    if facts is None:
        facts = factors(w)
    return _by_length(u for u in facts if u + "a" in facts and u + "b" in facts)


def special_factors(w: str) -> SpecialFactors:
    facts = factors(w)
    left = left_special_factors(w, facts)
    right = right_special_factors(w, facts)
    right_set = set(right)
    return SpecialFactors(left=left, right=right, bispecial=[u for u in left if u in right_set])


def _longest(ws: list[str]) -> str | None:
    """Longest word of a length-sorted list; lexicographically smallest on ties."""
    if not ws:
        return None
    n = len(ws[-1])
    return min(u for u in ws if len(u) == n)


@dataclass(frozen=True)
class DeLucaParameters:
    """H, K, L, R together with their witnesses.

    ``h_w``/``k_w`` are the longest repeated prefix/suffix (lengths H-1, K-1);
    ``l_w``/``r_w`` are the longest left/right special factors (lengths L-1,
    R-1) or ``None`` when the word has no special factor at all.
    """

    H: int
    K: int
    L: int
    R: int
    h_w: str
    k_w: str
    l_w: str | None
    r_w: str | None

    def as_dict(self) -> dict:
        d = {"H": self.H, "K": self.K, "L": self.L, "R": self.R, "h_w": self.h_w, "k_w": self.k_w}
        if self.l_w is not None:
            d["l_w"] = self.l_w
        if self.r_w is not None:
            d["r_w"] = self.r_w
        return d


def de_luca_parameters(w: str) -> DeLucaParameters:
    if not w:
        raise ValueError("H, K, L, R are undefined for the empty word")
    sf = special_factors(w)
    h = longest_repeated_prefix(w)
    k = longest_repeated_suffix(w)
    lw = _longest(sf.left)
    rw = _longest(sf.right)
    return DeLucaParameters(
        H=len(h) + 1,
        K=len(k) + 1,
        L=0 if lw is None else len(lw) + 1,
        R=0 if rw is None else len(rw) + 1,
        h_w=h,
        k_w=k,
        l_w=lw,
        r_w=rw,
    )
