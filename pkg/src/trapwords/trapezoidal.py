"""Trapezoidal words: recognition, open/closed classification, the pq
factorization of non-Sturmian trapezoidal words, richness and semicentral
words.
"""

from __future__ import annotations

from dataclasses import dataclass

from .special import (
    DeLucaParameters,
    de_luca_parameters,
    left_special_factors,
    right_special_factors,
)
from .sturmian import is_balanced, is_central, minimal_pathological_pair
from .words import (
    InvariantViolation,
    PreconditionError,
    borders,
    factor_complexity,
    factors,
    has_internal_occurrence,
    is_palindrome,
    longest_border,
    longest_repeated_prefix,
    longest_repeated_suffix,
    occurrences,
    palindromic_factors,
    period,
    period_data,
    reversal,
)


def _require_nonempty(w: str) -> None:
    if not w:
        raise ValueError("the empty word is not in the domain of this operation")


# -- open / closed ---------------------------------------------------------


def is_closed(w: str) -> bool:
    """True iff ``w`` is empty or its longest repeated prefix occurs only as a
    prefix and as a suffix."""
    if not w:
        return True
    return not has_internal_occurrence(w, longest_repeated_prefix(w))


def is_open(w: str) -> bool:
    return not is_closed(w)


def closed_witness(w: str) -> str | None:
    """Longest border of ``w`` without internal occurrences, if any."""
    for u in reversed(borders(w)):
        if not has_internal_occurrence(w, u):
            return u
    return None


def _is_complete_return(w: str, u: str) -> bool:
    pos = occurrences(w, u).positions
    return len(pos) == 2 and pos[0] == 0 and pos[1] == len(w) - len(u)


def _is_left_special(w: str, u: str) -> bool:
    return ("a" + u) in w and ("b" + u) in w


def _is_right_special(w: str, u: str) -> bool:
    return (u + "a") in w and (u + "b") in w


def closed_characterization_oracles(w: str) -> list[bool]:
    """Ten independently evaluated characterizations of closedness, in order:

    1. some proper factor occurs exactly twice, as prefix and as suffix
    2. the longest repeated prefix has no internal occurrence
    3. the longest repeated suffix has no internal occurrence
    4. the longest repeated prefix is not right special
    5. the longest repeated suffix is not left special
    6. some border has no internal occurrence
    7. the longest border has no internal occurrence
    8. ``w`` is a complete return to its longest repeated prefix
    9. ``w`` is a complete return to its longest border
    10. ``w = uv = zu`` with ``v, z`` nonempty and no factor of the form ``xuy``
    """
    _require_nonempty(w)
    h = longest_repeated_prefix(w)
    k = longest_repeated_suffix(w)
    bs = borders(w)
    lb = longest_border(w)
    facts = factors(w)
    return [
        any(_is_complete_return(w, u) for u in facts if len(u) < len(w)),
        not has_internal_occurrence(w, h),
        not has_internal_occurrence(w, k),
        not _is_right_special(w, h),
        not _is_left_special(w, k),
        any(not has_internal_occurrence(w, u) for u in bs),
        not has_internal_occurrence(w, lb),
        _is_complete_return(w, h),
        _is_complete_return(w, lb),
        any(all(x + u + y not in facts for x in "ab" for y in "ab") for u in bs),
    ]


# -- trapezoidal recognition -------------------------------------------------


def is_trapezoidal(w: str) -> bool:
    _require_nonempty(w)
    p = de_luca_parameters(w)
    return p.R + p.K == len(w)


def is_trapezoidal_by_complexity(w: str) -> bool:
    """At most ``n + 1`` distinct factors of each length ``n``; stops early."""
    _require_nonempty(w)
    for n in range(1, len(w) + 1):
        if len({w[i : i + n] for i in range(len(w) - n + 1)}) > n + 1:
            return False
    return True


def trapezoidal_characterizations(w: str) -> list[bool]:
    """The seven equivalent trapezoidal conditions, evaluated separately:

    1. the complexity graph is an isosceles trapezoid (definition)
    2. ``|w| = L + H``
    3. ``|w| = R + K``
    4. at most one left special factor of each length
    5. at most one right special factor of each length
    6. at most ``n + 1`` factors of each length ``n``
    7. ``|f(n+1) - f(n)| <= 1`` for every ``n``
    """
    _require_nonempty(w)
    n = len(w)
    f = factor_complexity(w) + [0]
    p = de_luca_parameters(w)
    m, M = min(p.R, p.K), max(p.R, p.K)
    shape = (
        all(f[i] == i + 1 for i in range(m + 1))
        and all(f[i + 1] == f[i] for i in range(m, M))
        and all(f[i + 1] == f[i] - 1 for i in range(M, n + 1))
    )
    facts = factors(w)
    left_lengths = [len(u) for u in left_special_factors(w, facts)]
    right_lengths = [len(u) for u in right_special_factors(w, facts)]
    return [
        shape,
        n == p.L + p.H,
        n == p.R + p.K,
        len(left_lengths) == len(set(left_lengths)),
        len(right_lengths) == len(set(right_lengths)),
        all(f[i] <= i + 1 for i in range(n + 1)),
        all(abs(f[i + 1] - f[i]) <= 1 for i in range(n + 1)),
    ]


# -- pq factorization --------------------------------------------------------


def in_suffixes_of_powers(u: str, z: str) -> bool:
    """``u`` is a suffix of some power of ``z``."""
    return in_prefixes_of_powers(reversal(u), reversal(z))


def in_prefixes_of_powers(u: str, z: str) -> bool:
    """``u`` is a prefix of some power of ``z``."""
    if not z:
        return not u
    reps = -(-len(u) // len(z))
    return (z * reps).startswith(u)


def dalessandro_factorization(w: str) -> tuple[str, str]:
    """Split a non-Sturmian trapezoidal word as ``w = pq`` with ``|q| = K_w``.

    Verifies that ``p`` is a suffix of a power of the reversed fractional
    root of ``f`` and ``q`` a prefix of a power of the fractional root of
    ``g``, where ``(f, g)`` is the minimal pathological pair, and that the
    longest right special factor is the longest proper prefix of ``p``.
    """
    _require_nonempty(w)
    params = de_luca_parameters(w)
    if params.R + params.K != len(w):
        raise PreconditionError(f"{w!r} is not trapezoidal")
    pair = minimal_pathological_pair(w)
    if pair is None:
        raise PreconditionError(f"{w!r} is Sturmian; the pq factorization needs a non-Sturmian word")
    cut = len(w) - params.K
    p, q = w[:cut], w[cut:]
    zf = period_data(pair.f).fractional_root
    zg = period_data(pair.g).fractional_root
    if not in_suffixes_of_powers(p, reversal(zf)):
        raise InvariantViolation(f"p={p!r} is not a suffix of a power of {reversal(zf)!r}")
    if not in_prefixes_of_powers(q, zg):
        raise InvariantViolation(f"q={q!r} is not a prefix of a power of {zg!r}")
    if params.r_w != w[: params.R - 1]:
        raise InvariantViolation(f"longest right special factor of {w!r} is not the prefix of length R-1")
    return p, q


# -- richness ----------------------------------------------------------------


def is_rich(w: str) -> bool:
    return len(palindromic_factors(w)) == len(w) + 1


def is_rich_by_complete_returns(w: str) -> bool:
    """Every complete return to a palindrome is itself a palindrome."""
    for u in palindromic_factors(w):
        if not u:
            continue
        pos = occurrences(w, u).positions
        for i, j in zip(pos, pos[1:]):
            if not is_palindrome(w[i : j + len(u)]):
                return False
    return True


# -- semicentral words -------------------------------------------------------


def is_semicentral(w: str) -> bool:
    _require_nonempty(w)
    p = de_luca_parameters(w)
    return p.R + p.K == len(w) and p.h_w == p.k_w == p.r_w == p.l_w


def semicentral_decompose(w: str) -> tuple[str, str, str]:
    """Read off ``w = u x y u``; ``u`` is central and ``x != y``."""
    if not w or not is_semicentral(w):
        raise PreconditionError(f"{w!r} is not semicentral")
    m = (len(w) - 2) // 2
    u, x, y = w[:m], w[m], w[m + 1]
    if len(w) != 2 * m + 2 or w != u + x + y + u or x == y or not is_central(u):
        raise InvariantViolation(f"semicentral word {w!r} is not of the form uxyu")
    return u, x, y


def is_uxyu(w: str) -> bool:
    """``w = u x y u`` with ``u`` central and ``x != y``."""
    if len(w) % 2 or len(w) < 2:
        return False
    m = len(w) // 2 - 1
    return w[:m] == w[m + 2 :] and w[m] != w[m + 1] and is_central(w[:m])


# -- aggregate report --------------------------------------------------------


@dataclass(frozen=True)
class TrapezoidalReport:
    word: str
    is_trapezoidal: bool
    is_sturmian: bool
    is_rich: bool
    is_palindrome: bool
    openness: str
    is_semicentral: bool
    parameters: DeLucaParameters
    closed_witness: str | None = None
    pq_split: tuple[str, str] | None = None
    semicentral_triple: tuple[str, str, str] | None = None

    def as_dict(self) -> dict:
        d = {
            "word": self.word,
            "is_trapezoidal": self.is_trapezoidal,
            "is_sturmian": self.is_sturmian,
            "is_rich": self.is_rich,
            "is_palindrome": self.is_palindrome,
            "openness": self.openness,
            "is_semicentral": self.is_semicentral,
            "parameters": self.parameters.as_dict(),
        }
        if self.closed_witness is not None:
            d["closed_witness"] = self.closed_witness
        if self.pq_split is not None:
            d["pq_split"] = {"p": self.pq_split[0], "q": self.pq_split[1]}
        if self.semicentral_triple is not None:
            u, x, y = self.semicentral_triple
            d["semicentral_triple"] = {"u": u, "x": x, "y": y}
        return d


def classify(w: str) -> TrapezoidalReport:
    _require_nonempty(w)
    params = de_luca_parameters(w)
    trapezoidal = params.R + params.K == len(w)
    sturmian = is_balanced(w)
    closed = is_closed(w)
    palindrome = is_palindrome(w)
    semicentral = trapezoidal and params.h_w == params.k_w == params.r_w == params.l_w
    report = TrapezoidalReport(
        word=w,
        is_trapezoidal=trapezoidal,
        is_sturmian=sturmian,
        is_rich=is_rich(w),
        is_palindrome=palindrome,
        openness="closed" if closed else "open",
        is_semicentral=semicentral,
        parameters=params,
        closed_witness=closed_witness(w) if closed else None,
        pq_split=dalessandro_factorization(w) if trapezoidal and not sturmian else None,
        semicentral_triple=semicentral_decompose(w) if semicentral else None,
    )
    _check_report(report)
    return report


def _check_report(r: TrapezoidalReport) -> None:
    closed = r.openness == "closed"
    violated = []
    if r.is_semicentral and (closed or not r.is_trapezoidal):
        violated.append("semicentral words are open and trapezoidal")
    if r.is_trapezoidal and closed and not r.is_sturmian:
        violated.append("closed trapezoidal words are Sturmian")
    if r.is_trapezoidal and r.is_palindrome and not (r.is_sturmian and closed):
        violated.append("trapezoidal palindromes are closed Sturmian words")
    if r.is_sturmian and not r.is_trapezoidal:
        violated.append("Sturmian words are trapezoidal")
    if r.is_trapezoidal and not r.is_rich:
        violated.append("trapezoidal words are rich")
    if violated:
        raise InvariantViolation(f"report for {r.word!r}: " + "; ".join(violated))


# -- Sturmian palindromes ----------------------------------------------------


@dataclass(frozen=True)
class SturmianPalindromeTests:
    """Facts about palindromes and closed trapezoidal words.

    The ``*_holds`` fields are the implications themselves; each is ``True``
    vacuously when its hypothesis fails.
    """

    closed_trapezoidal: bool
    h_palindrome: bool
    sturmian_palindrome: bool
    period: int
    R: int
    # closed trapezoidal => (h_w palindrome <=> Sturmian palindrome)
    h_criterion_holds: bool
    # palindrome => (Sturmian <=> period == R + 1)
    period_law_holds: bool
    # closed trapezoidal => l_w == r_w and l_w central
    special_central_holds: bool


def sturmian_palindrome_tests(w: str) -> SturmianPalindromeTests:
    _require_nonempty(w)
    params = de_luca_parameters(w)
    closed_trap = params.R + params.K == len(w) and is_closed(w)
    sturmian = is_balanced(w)
    palindrome = is_palindrome(w)
    h_pal = is_palindrome(params.h_w)
    pi = period(w)
    special_central = (
        params.l_w is not None and params.l_w == params.r_w and is_central(params.l_w)
    ) or (params.l_w is None and params.r_w is None)
    return SturmianPalindromeTests(
        closed_trapezoidal=closed_trap,
        h_palindrome=h_pal,
        sturmian_palindrome=sturmian and palindrome,
        period=pi,
        R=params.R,
        h_criterion_holds=not closed_trap or h_pal == (sturmian and palindrome),
        period_law_holds=not palindrome or sturmian == (pi == params.R + 1),
        special_central_holds=not closed_trap or special_central,
    )
