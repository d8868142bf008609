"""Command-line interface.

Usage:
    trapwords analyze aaababa --format json
    trapwords count 7 --both
    trapwords table 20
    trapwords fibonacci 20 --runs
    trapwords generate 8 semicentral
    trapwords complexity aaababa

Exit status: 0 on success, 1 when brute-force counts disagree with the
formulas, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import enumeration as en
from .fibonacci import analyze_prefixes
from .trapezoidal import classify
from .words import WordError, factor_complexity, parse_word

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
TABLE_CAP = 64


class UsageError(Exception):
    pass


def _read_word(args) -> str:
    if args.file:
        try:
            with open(args.file, encoding="ascii") as fh:
                text = fh.read().strip()
        except (OSError, UnicodeDecodeError) as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from exc
    elif args.word is not None:
        text = args.word
    else:
        raise UsageError("a word or --file PATH is required")
    try:
        return parse_word(text)
    except WordError as exc:
        raise UsageError(str(exc)) from exc


def _flatten(d: dict, prefix: str = "") -> list[tuple[str, object]]:
    rows = []
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            rows.extend(_flatten(v, key + "."))
        else:
            rows.append((key, v))
    return rows


def _show(v: object) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, list):
        return ",".join(map(str, v))
    return str(v)


def cmd_analyze(args) -> int:
    w = _read_word(args)
    if not w:
        raise UsageError("analyze needs a nonempty word")
    data = classify(w).as_dict()
    data["complexity"] = factor_complexity(w)
    if args.format == "json":
        print(json.dumps(data, indent=2))
    elif args.format == "tsv":
        for k, v in _flatten(data):
            print(f"{k}\t{_show(v)}")
    else:
        width = max(len(k) for k, _ in _flatten(data))
        for k, v in _flatten(data):
            print(f"{k:<{width}}  {_show(v)}")
    return EXIT_OK


def cmd_complexity(args) -> int:
    w = _read_word(args)
    for n, c in enumerate(factor_complexity(w)):
        print(f"{n}\t{c}")
    return EXIT_OK


def _counts(n: int, mode: str, workers: int | None) -> tuple[dict, int]:
    row = en.CountRow.from_formulas(n)
    if mode != "formula":
        if n > en.CENSUS_CAP:
            raise UsageError(f"brute-force counting is capped at n = {en.CENSUS_CAP}")
        row = en.census(en.CensusConfig(max_length=n, min_length=n, workers=workers)).rows[0]
    d = row.as_dict()
    if mode == "brute":
        d = {"n": n, **{k: v for k, v in d.items() if k.endswith("_brute")}}
        return d, EXIT_OK
    if mode == "both":
        ok = not row.mismatches()
        d["verdict"] = "MATCH" if ok else "MISMATCH"
        return d, EXIT_OK if ok else EXIT_MISMATCH
    return d, EXIT_OK


def cmd_count(args) -> int:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    d, status = _counts(args.n, args.mode, args.workers)
    if args.format == "json":
        print(json.dumps(d, indent=2))
    elif args.format == "tsv":
        print("\t".join(d))
        print("\t".join(str(v) for v in d.values()))
    else:
        for k, v in d.items():
            print(f"{k}\t{v}" if k != "verdict" else v)
    return status


def cmd_table(args) -> int:
    if not 1 <= args.max_n <= TABLE_CAP:
        raise UsageError(f"max_n must be in [1, {TABLE_CAP}]")
    ledger = en.formula_ledger(args.max_n)
    status = EXIT_OK
    if args.brute:
        top = min(args.max_n, en.CENSUS_CAP)
        brute = en.census(en.CensusConfig(max_length=top, workers=args.workers))
        for row, b in zip(ledger.rows, brute.rows):
            row.brute = b.brute
        if ledger.mismatches():
            status = EXIT_MISMATCH
    if args.format == "json":
        print(ledger.to_json())
    elif args.format == "tsv":
        sys.stdout.write(ledger.to_tsv())
    else:
        lines = [line.split("\t") for line in ledger.to_tsv().splitlines()]
        widths = [max(len(r[i]) if i < len(r) else 0 for r in lines) for i in range(len(lines[0]))]
        for r in lines:
            print("  ".join(cell.rjust(wd) for cell, wd in zip(r, widths)).rstrip())
    return status


def cmd_fibonacci(args) -> int:
    if args.max_length < 1:
        raise UsageError("max_length must be >= 1")
    a = analyze_prefixes(args.max_length)
    if args.format == "json":
        print(json.dumps({
            "max_length": a.max_length,
            "markers": a.markers(),
            "run_lengths": a.run_lengths,
            "verified_up_to": a.verified_up_to,
        }, indent=2))
    elif args.format == "tsv":
        sys.stdout.write(a.to_tsv())
    else:
        print(a.markers())
        if args.runs:
            print(",".join(map(str, a.run_lengths)))
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.cls not in en.GENERATE_CLASSES:
        raise UsageError(
            f"unknown class {args.cls!r}; valid classes: {', '.join(en.GENERATE_CLASSES)}"
        )
    if not 1 <= args.n <= en.GENERATE_CAP:
        raise UsageError(f"n must be in [1, {en.GENERATE_CAP}]")
    for w in en.generate(args.n, args.cls):
        print(w)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trapwords", description="Trapezoidal words toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def word_args(p):
        p.add_argument("word", nargs="?", help='word over {a,b}; "eps" for the empty word')
        p.add_argument("--file", metavar="PATH", help="read the word from a one-line ASCII file")

    def format_arg(p):
        p.add_argument("--format", choices=("plain", "json", "tsv"), default="plain")

    def workers_arg(p):
        p.add_argument(
            "--workers", type=int, default=None,
            help=f"census processes (default: ${en.WORKERS_ENV} or CPU count)",
        )

    p = sub.add_parser("analyze", help="classify a word")
    word_args(p)
    format_arg(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("complexity", help="factor complexity as two-column TSV")
    word_args(p)
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("count", help="counts of length n")
    p.add_argument("n", type=int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--formula", dest="mode", action="store_const", const="formula")
    mode.add_argument("--brute", dest="mode", action="store_const", const="brute")
    mode.add_argument("--both", dest="mode", action="store_const", const="both")
    p.set_defaults(mode="formula")
    format_arg(p)
    workers_arg(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="count ledger for lengths 1..max_n")
    p.add_argument("max_n", type=int)
    p.add_argument("--brute", action="store_true", help="add brute-force columns")
    format_arg(p)
    workers_arg(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("fibonacci", help="open/closed prefixes of the Fibonacci word")
    p.add_argument("max_length", type=int)
    p.add_argument("--runs", action="store_true", help="also print run lengths")
    format_arg(p)
    p.set_defaults(func=cmd_fibonacci)

    p = sub.add_parser("generate", help="list all words of a class")
    p.add_argument("n", type=int)
    p.add_argument("cls", metavar="class", help=", ".join(en.GENERATE_CLASSES))
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"trapwords {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
