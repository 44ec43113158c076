"""Command-line interface: ``peano-words <subcommand> ...``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formulas
from .counting import (
    DIGITS,
    adjacency_stats,
    count_fast,
    count_occurrences,
    count_occurrences_naive,
    classify,
    letter_frequencies,
)
from .errors import PeanoError
from .patterns import format_pattern, parse_pattern
from .render import render_svg
from .verify import EXIT_USAGE, SuiteConfig, exit_status, parse_suites, run_suite, summarize, write_report
from .wordfile import load_word, write_packed, write_text
from .words import DEFAULT_CAP, LetterStream, build_word, stream_letters, word_length


def _open_out(path: str | None):
    return open(path, "wb") if path else sys.stdout.buffer


def cmd_generate(args) -> int:
    stream = stream_letters(args.n)
    fh = _open_out(args.out)
    try:
        if args.format == "packed":
            if not args.out:
                raise PeanoError("packed output needs --out")
            write_packed(fh, args.n, len(stream), stream.chunks())
        else:
            write_text(fh, stream.chunks())
    finally:
        if args.out:
            fh.close()
    return 0


def cmd_count(args) -> int:
    pattern = parse_pattern(args.pattern)
    method = args.method
    if args.word_file:
        _, word = load_word(args.word_file, DIGITS)
    elif args.n <= DEFAULT_CAP and method != "fast":
        word = build_word(args.n)
    else:
        word = stream_letters(args.n)
    if method == "auto":
        method = "fast" if classify(pattern) is not None else "dp"
    if method == "fast":
        result = count_fast(word, pattern)
    elif isinstance(word, LetterStream):
        raise PeanoError(f"the {method} counter needs n <= {DEFAULT_CAP}; try --method fast")
    elif method == "naive":
        result = count_occurrences_naive(word, pattern)
    else:
        result = count_occurrences(word, pattern)
    print(f"{format_pattern(pattern)}\t{result}")
    return 0


def cmd_frequencies(args) -> int:
    if args.method == "formula":
        freqs = formulas.frequency_formula(args.n)
    elif args.method == "recurrence":
        freqs = formulas.frequency_recurrence(args.n)
    else:
        freqs = letter_frequencies(stream_letters(args.n))
    for letter, count in enumerate(freqs, start=1):
        print(f"{letter}\t{count}")
    return 0


def cmd_stats(args) -> int:
    stats = adjacency_stats(stream_letters(args.n))
    print(f"length\t{word_length(args.n)}")
    print(f"rises\t{stats.rises}")
    print(f"descents\t{stats.descents}")
    print(f"equals\t{stats.equals}")
    return 0


def cmd_formula(args) -> int:
    n = args.n
    if args.name == "lemma1":
        for letter, count in enumerate(formulas.frequency_formula(n), start=1):
            print(f"{letter}\t{count}")
    elif args.name == "corollary2":
        print(formulas.power_pattern_formula(n, _need(args.l, "--l")))
    elif args.name == "theorem4":
        pair = formulas.rises_descents_formula(n)
        print(f"rises\t{pair.rises}")
        print(f"descents\t{pair.descents}")
    else:
        kind = _need(args.kind, "--kind")
        z = args.z if kind == "tau3" else None
        if kind == "tau3":
            _need(z, "--z")
        value = formulas.tau_table_value(kind, _need(args.x, "--x"), _need(args.y, "--y"), z, n, _need(args.l, "--l"))
        print(value)
    return 0


def _need(value, flag: str):
    if value is None:
        raise PeanoError(f"{flag} is required here")
    return value


def cmd_verify(args) -> int:
    cfg = SuiteConfig(
        suites=parse_suites(args.suites),
        max_n=args.max_n,
        max_l=args.max_l,
        workers=args.workers,
        report=args.report,
    )
    records = run_suite(cfg)
    if cfg.report:
        write_report(records, cfg.report)
    print(summarize(records))
    status = exit_status(records)
    print(f"exit status {status}")
    return status


def cmd_render(args) -> int:
    Path(args.out).write_text(render_svg(args.n), encoding="utf-8")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="peano-words", description="Peano words and pattern counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write X_n to a file or stdout")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "packed"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("count", help="count pattern occurrences")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=int)
    src.add_argument("--word-file")
    p.add_argument("--pattern", required=True)
    p.add_argument("--method", choices=("dp", "naive", "fast", "auto"), default="auto")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("frequencies", help="letter counts of X_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("oracle", "formula", "recurrence"), default="oracle")
    p.set_defaults(func=cmd_frequencies)

    p = sub.add_parser("stats", help="rises/descents/equals of X_n (streamed)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("formula", help="evaluate a closed form")
    p.add_argument("--name", choices=("lemma1", "corollary2", "theorem4", "table"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--kind", choices=("tau1", "tau2", "tau3"))
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--z", type=int)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", help="run oracle-vs-formula suites")
    p.add_argument("--suites", default="all", help="comma-separated suite names or 'all'")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-l", type=int, default=4)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw X_n as an SVG polyline")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PeanoError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
