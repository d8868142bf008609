"""Prefixes of the Fibonacci word and their open/closed pattern."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby

from .sturmian import is_central
from .trapezoidal import is_closed, is_semicentral
from .words import InvariantViolation

MAX_LENGTH = 10**5
# Prefixes beyond this length are marked by the interval rule only.
VERIFY_LIMIT = 5000


def fibonacci_numbers(k: int) -> list[int]:
    """``[F_1, ..., F_k]`` with ``F_1 = F_2 = 1``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    fs = [1, 1]
    while len(fs) < k:
        fs.append(fs[-1] + fs[-2])
    return fs[:k]


def fibonacci_prefix(n: int) -> str:
    """First ``n`` letters of the fixed point of ``a -> ab, b -> a``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    w = "a"
    while len(w) < n:
        w = "".join("ab" if c == "a" else "a" for c in w)
    return w[:n]


def _fib(i: int) -> int:
    return fibonacci_numbers(i)[-1]


def palindromic_prefixes(max_i: int) -> list[str]:
    """``[s_3, ..., s_max_i]`` where ``s_i`` is the prefix of length ``F_i - 2``."""
    if max_i < 3:
        raise ValueError(f"max_i must be >= 3, got {max_i}")
    fs = fibonacci_numbers(max_i)
    f = fibonacci_prefix(fs[-1])
    return [f[: fs[i - 1] - 2] for i in range(3, max_i + 1)]


def xy_letters(i: int) -> tuple[str, str]:
    """The letters ``(x_i, y_i)``: ``(b, a)`` for even ``i``, ``(a, b)`` for odd."""
    return ("b", "a") if i % 2 == 0 else ("a", "b")


def predicted_open(n: int) -> bool:
    """Interval rule: the prefix of length ``n`` is open iff
    ``F_{i+1} - 1 <= n <= 2 F_i - 2`` for some ``i >= 1``."""
    fi, fi1 = 1, 1  # F_i, F_{i+1}
    while fi1 - 1 <= n:
        if n <= 2 * fi - 2:
            return True
        fi, fi1 = fi1, fi + fi1
    return False


@dataclass(frozen=True)
class FibonacciAnalysis:
    max_length: int
    sequence: list[str]
    run_lengths: list[int]
    predicted: list[str]
    verified_up_to: int

    def markers(self) -> str:
        return "".join(self.sequence)

    def to_tsv(self) -> str:
        return (
            "length\t" + "\t".join(str(n) for n in range(1, self.max_length + 1)) + "\n"
            "marker\t" + "\t".join(self.sequence) + "\n"
        )


def _runs(markers: list[str]) -> list[int]:
    return [len(list(g)) for _, g in groupby(markers)]


def analyze_prefixes(max_length: int, verify_limit: int = VERIFY_LIMIT) -> FibonacciAnalysis:
    """Mark each prefix of length ``1..max_length`` as closed (c) or open (o).

    Up to ``verify_limit`` the marker comes from the open/closed classifier
    and must agree with the interval rule; beyond it only the rule is used.
    """
    if not 1 <= max_length <= MAX_LENGTH:
        raise ValueError(f"max_length must be in [1, {MAX_LENGTH}], got {max_length}")
    f = fibonacci_prefix(max_length)
    predicted = ["o" if predicted_open(n) else "c" for n in range(1, max_length + 1)]
    verified = min(max_length, verify_limit)
    sequence = ["c" if is_closed(f[:n]) else "o" for n in range(1, verified + 1)]
    for n, (got, want) in enumerate(zip(sequence, predicted), start=1):
        if got != want:
            raise InvariantViolation(f"prefix of length {n}: classifier says {got}, interval rule says {want}")
    sequence += predicted[verified:]
    return FibonacciAnalysis(
        max_length=max_length,
        sequence=sequence,
        run_lengths=_runs(sequence),
        predicted=predicted,
        verified_up_to=verified,
    )


@dataclass(frozen=True)
class RunBoundary:
    i: int
    closed_end: str
    open_end: str
    s_i: str
    x: str
    y: str


def run_boundary_words(i: int) -> RunBoundary:
    """Last prefixes of the open run ``[F_{i+1}-1, 2F_i-2]`` and of the closed
    run that follows it, ending at ``F_{i+2}-2``."""
    if i < 4:
        raise ValueError(f"i must be >= 4, got {i}")
    fs = fibonacci_numbers(i + 2)
    f = fibonacci_prefix(fs[i + 1] - 2)
    closed_end = f
    open_end = f[: 2 * fs[i - 1] - 2]
    s_i = f[: fs[i - 1] - 2]
    x, y = xy_letters(i)
    if not is_central(closed_end):
        raise InvariantViolation(f"closed-run end {closed_end!r} is not central")
    if not is_semicentral(open_end):
        raise InvariantViolation(f"open-run end {open_end!r} is not semicentral")
    if open_end != s_i + x + y + s_i:
        raise InvariantViolation(f"open-run end {open_end!r} is not s_i x y s_i")
    return RunBoundary(i=i, closed_end=closed_end, open_end=open_end, s_i=s_i, x=x, y=y)
