"""Closed-form counts and the brute-force census that checks them.

The census walks every binary word of each length, so it is exponential;
the default cutoff of 16 keeps it to a few seconds per length.
"""

from __future__ import annotations

import json
import os
import warnings
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .sturmian import central_words, is_balanced, is_central
from .trapezoidal import (
    is_closed,
    is_rich,
    is_semicentral,
    is_trapezoidal_by_complexity,
)
from .words import period_data, reversal

CENSUS_DEFAULT = 16
CENSUS_CAP = 24
GENERATE_CAP = 20
WORKERS_ENV = "TRAPWORDS_WORKERS"

CENSUS_CLASSES = ("sturmian", "nonsturmian_trapezoidal", "trapezoidal", "semicentral", "central")
GENERATE_CLASSES = (
    "trapezoidal",
    "sturmian",
    "central",
    "semicentral",
    "closed_trapezoidal",
    "open_trapezoidal",
    "rich",
)


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"phi is defined for n >= 1, got {n}")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _check_length(n: int) -> None:
    if n < 1:
        raise ValueError(f"length must be >= 1, got {n}")


def sturmian_count(n: int) -> int:
    _check_length(n)
    return 1 + sum((n - i + 1) * euler_phi(i) for i in range(1, n + 1))


def nonsturmian_trapezoidal_count(n: int) -> int:
    _check_length(n)
    return sum(2 * (n - 2 * i - 3) * euler_phi(i + 2) for i in range((n - 4) // 2 + 1))


def trapezoidal_count(n: int) -> int:
    return sturmian_count(n) + nonsturmian_trapezoidal_count(n)


def semicentral_count(n: int) -> int:
    _check_length(n)
    return 0 if n % 2 else 2 * euler_phi(n // 2 + 1)


def central_count(n: int) -> int:
    if n < 0:
        raise ValueError(f"length must be non-negative, got {n}")
    return euler_phi(n + 2)


FORMULAS = {
    "sturmian": sturmian_count,
    "nonsturmian_trapezoidal": nonsturmian_trapezoidal_count,
    "trapezoidal": trapezoidal_count,
    "semicentral": semicentral_count,
    "central": central_count,
}


# -- ledger --------------------------------------------------------------------

# TSV/JSON column names, in output order.
_COLUMNS = [
    ("S", "sturmian"),
    ("T", "nonsturmian_trapezoidal"),
    ("total", "trapezoidal"),
    ("SC", "semicentral"),
    ("central", "central"),
]


@dataclass
class CountRow:
    n: int
    formula: dict[str, int]
    brute: dict[str, int] | None = None

    @classmethod
    def from_formulas(cls, n: int) -> CountRow:
        return cls(n, {name: f(n) for name, f in FORMULAS.items()})

    def mismatches(self) -> list[str]:
        if self.brute is None:
            return []
        return [k for k, v in self.brute.items() if self.formula[k] != v]

    def as_dict(self) -> dict:
        d = {"n": self.n}
        for label, key in _COLUMNS:
            d[label] = self.formula[key]
        if self.brute is not None:
            for label, key in _COLUMNS:
                if key in self.brute:
                    d[f"{label}_brute"] = self.brute[key]
        return d


@dataclass
class CountLedger:
    rows: list[CountRow] = field(default_factory=list)

    def mismatches(self) -> list[tuple[int, str]]:
        return [(r.n, k) for r in self.rows for k in r.mismatches()]

    def column(self, key: str, brute: bool = False) -> list[int]:
        return [(r.brute if brute else r.formula)[key] for r in self.rows]

    def to_json(self) -> str:
        return json.dumps([r.as_dict() for r in self.rows], indent=2)

    def to_tsv(self) -> str:
        header = ["n"] + [label for label, _ in _COLUMNS]
        has_brute = any(r.brute is not None for r in self.rows)
        if has_brute:
            header += [f"{label}_brute" for label, _ in _COLUMNS]
        lines = ["\t".join(header)]
        for r in self.rows:
            d = r.as_dict()
            lines.append("\t".join(str(d.get(h, "")) for h in header))
        return "\n".join(lines) + "\n"


def formula_ledger(max_n: int) -> CountLedger:
    _check_length(max_n)
    return CountLedger([CountRow.from_formulas(n) for n in range(1, max_n + 1)])


# -- census --------------------------------------------------------------------


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class CensusConfig:
    max_length: int = CENSUS_DEFAULT
    min_length: int = 1
    classes: tuple[str, ...] = CENSUS_CLASSES
    workers: int | None = 1

    def validate(self) -> None:
        if not 1 <= self.max_length <= CENSUS_CAP:
            raise ValueError(f"census max_length must be in [1, {CENSUS_CAP}], got {self.max_length}")
        if not 1 <= self.min_length <= self.max_length:
            raise ValueError(f"census min_length must be in [1, max_length], got {self.min_length}")
        unknown = set(self.classes) - set(CENSUS_CLASSES)
        if unknown:
            raise ValueError(f"unknown census classes: {sorted(unknown)}")
        if self.workers is not None and self.workers < 1:
            raise ValueError("workers must be >= 1")


def _tally(w: str, classes: tuple[str, ...]) -> list[str]:
    hits = []
    trapezoidal = is_trapezoidal_by_complexity(w)
    sturmian = is_balanced(w)
    if trapezoidal:
        hits.append("trapezoidal")
        if not sturmian:
            hits.append("nonsturmian_trapezoidal")
        if "semicentral" in classes and is_semicentral(w):
            hits.append("semicentral")
    if sturmian:
        hits.append("sturmian")
    if "central" in classes and is_central(w):
        hits.append("central")
    return [h for h in hits if h in classes]


def _census_block(args: tuple[int, str, tuple[str, ...]]) -> tuple[int, dict[str, int]]:
    n, head, classes = args
    counts: Counter[str] = Counter({c: 0 for c in classes})
    for tail in product("ab", repeat=n - len(head)):
        counts.update(_tally(head + "".join(tail), classes))
    return n, dict(counts)


def _blocks(config: CensusConfig, head_length: int = 4):
    for n in range(config.min_length, config.max_length + 1):
        k = min(n, head_length)
        for head in product("ab", repeat=k):
            yield n, "".join(head), config.classes


def census(config: CensusConfig | None = None) -> CountLedger:
    """Count every class by exhaustive enumeration and pair with the formulas.

    Work is split by fixed-length prefixes; partial tallies are merged by
    integer addition, so the result does not depend on ``workers``.
    """
    config = config or CensusConfig()
    config.validate()
    if config.max_length > CENSUS_DEFAULT:
        warnings.warn(
            f"census up to length {config.max_length} enumerates "
            f"{2 ** (config.max_length + 1):,} words and may take a long time",
            stacklevel=2,
        )
    workers = config.workers or default_workers()
    totals: dict[int, Counter[str]] = {
        n: Counter({c: 0 for c in config.classes})
        for n in range(config.min_length, config.max_length + 1)
    }
    blocks = list(_blocks(config))
    if workers == 1:
        results = map(_census_block, blocks)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_census_block, blocks, chunksize=4)
    for n, counts in results:
        totals[n].update(counts)
    if workers != 1:
        pool.shutdown()
    rows = []
    for n, counts in totals.items():
        row = CountRow.from_formulas(n)
        row.brute = {c: counts[c] for c in CENSUS_CLASSES if c in config.classes}
        rows.append(row)
    return CountLedger(rows)


# -- generation ----------------------------------------------------------------


def _extend(n: int, keep) -> list[str]:
    """Depth-first, a before b, pruning on a factor-closed predicate."""
    out: list[str] = []
    stack = [""]
    while stack:
        w = stack.pop()
        if len(w) == n:
            out.append(w)
            continue
        for x in "ba":
            v = w + x
            if keep(v):
                stack.append(v)
    return out


def _all_words(n: int) -> list[str]:
    return ["".join(t) for t in product("ab", repeat=n)]


def generate(n: int, cls: str) -> list[str]:
    """All words of length ``n`` in ``cls``, lexicographically ordered.

    Trapezoidal, Sturmian and rich words are closed under taking factors, so
    the search prunes any prefix that leaves the class.
    """
    if not 1 <= n <= GENERATE_CAP:
        raise ValueError(f"n must be in [1, {GENERATE_CAP}], got {n}")
    if cls == "trapezoidal":
        return _extend(n, is_trapezoidal_by_complexity)
    if cls == "sturmian":
        return _extend(n, is_balanced)
    if cls == "rich":
        return _extend(n, is_rich)
    if cls == "central":
        return [w for w in _extend(n, is_balanced) if is_central(w)]
    if cls == "semicentral":
        return [w for w in _extend(n, is_trapezoidal_by_complexity) if is_semicentral(w)]
    if cls == "closed_trapezoidal":
        return [w for w in _extend(n, is_trapezoidal_by_complexity) if is_closed(w)]
    if cls == "open_trapezoidal":
        return [w for w in _extend(n, is_trapezoidal_by_complexity) if not is_closed(w)]
    raise ValueError(f"unknown class {cls!r}; valid classes: {', '.join(GENERATE_CLASSES)}")


def generate_by_filter(n: int, cls: str) -> list[str]:
    """Unpruned reference for :func:`generate`: filter all of ``{a,b}^n``."""
    from .trapezoidal import is_trapezoidal

    preds = {
        "trapezoidal": is_trapezoidal,
        "sturmian": is_balanced,
        "rich": is_rich,
        "central": is_central,
        "semicentral": is_semicentral,
        "closed_trapezoidal": lambda w: is_trapezoidal(w) and is_closed(w),
        "open_trapezoidal": lambda w: is_trapezoidal(w) and not is_closed(w),
    }
    if cls not in preds:
        raise ValueError(f"unknown class {cls!r}")
    return [w for w in _all_words(n) if preds[cls](w)]


def suffix_of_powers(z: str, j: int) -> str:
    """The unique word of length ``j`` that is a suffix of a power of ``z``."""
    return (z * (j // len(z) + 1))[len(z) * (j // len(z) + 1) - j :]


def prefix_of_powers(z: str, j: int) -> str:
    """The unique word of length ``j`` that is a prefix of a power of ``z``."""
    return (z * (j // len(z) + 1))[:j]


def nonsturmian_trapezoidal_constructive(n: int) -> list[str]:
    """Build the non-Sturmian trapezoidal words of length ``n`` as ``pq``.

    For each central ``u`` and ordered letter pair ``x != y``, ``p`` is a
    suffix (length >= |u|+2) of a power of the reversed fractional root of
    ``xux`` and ``q`` a prefix (length >= |u|+2) of a power of the
    fractional root of ``yuy``.
    """
    _check_length(n)
    found = set()
    for m in range(max((n - 4) // 2 + 1, 0)):
        for u in central_words(m):
            for x, y in (("a", "b"), ("b", "a")):
                zf = reversal(period_data(x + u + x).fractional_root)
                zg = period_data(y + u + y).fractional_root
                for j in range(m + 2, n - m - 1):
                    found.add(suffix_of_powers(zf, j) + prefix_of_powers(zg, n - j))
    return sorted(found)
