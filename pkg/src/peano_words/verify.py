"""Oracle-versus-formula verification harness.

Every case compares an independently computed value (``oracle``: brute-force
counting on the materialized word, or the recurrence when checking a closed
form) with the closed-form value (``formula``). Records are merged in a
canonical order so the report does not depend on the worker count.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .counting import (
    adjacency_stats,
    count_anchored_run,
    count_embeddings,
    count_occurrences,
    letter_frequencies,
)
from .errors import CapacityError, DomainError
from .formulas import (
    TABLE_ROWS,
    frequency_formula,
    frequency_recurrence,
    parity_of,
    pattern_notation,
    power_pattern_formula,
    rises_descents_formula,
    rises_descents_recurrence,
    tau_table_value,
)
from .words import DEFAULT_CAP, PeanoWord, TransformKind, apply_transform, build_word

SUITES = ("frequencies", "rises", "powers", "tables", "anchored", "zeros", "lemma3", "recurrences")

# published cells that disagree with the oracle: (kind, x, y, z, parity)
ERRATA = frozenset(
    {
        ("tau1", 1, 1, None, "even"),
        ("tau2", 1, 1, None, "even"),
        ("tau3", 1, 1, 1, "even"),
    }
)

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_ERRATA_ONLY = 10


@dataclass(frozen=True)
class SuiteConfig:
    suites: tuple[str, ...] = SUITES
    max_n: int = 6
    max_l: int = 4
    workers: int = 1
    report: str | None = None
    cap: int = DEFAULT_CAP
    recurrence_max_n: int = 64
    lemma3_max_length: int = 7
    lemma3_random: int = 1000
    seed: int = 0

    def __post_init__(self):
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise DomainError(f"unknown suites: {', '.join(sorted(unknown))}")
        if self.max_n < 1 or self.max_l < 0 or self.workers < 1:
            raise DomainError("max_n >= 1, max_l >= 0 and workers >= 1 are required")


def parse_suites(text: str) -> tuple[str, ...]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    if not names or "all" in names:
        return SUITES
    return tuple(dict.fromkeys(names))


@dataclass
class VerificationRecord:
    suite: str
    n: int
    pattern: str | None
    l: int | None
    oracle: str | None
    formula: str | None
    match: bool | None
    elapsed_ms: float = 0.0
    suspect: bool = field(default=False, compare=False)

    def to_json(self) -> str:
        return json.dumps(
            {
                "suite": self.suite,
                "n": self.n,
                "pattern": self.pattern,
                "l": self.l,
                "oracle": self.oracle,
                "formula": self.formula,
                "match": self.match,
                "elapsed_ms": self.elapsed_ms,
            }
        )

    def sort_key(self):
        return (SUITES.index(self.suite), self.n, self.pattern or "", -1 if self.l is None else self.l)

    @property
    def skipped(self) -> bool:
        return self.match is None


def _fmt(value) -> str:
    if isinstance(value, (tuple, list)):
        return ",".join(str(int(v)) for v in value)
    return str(int(value))


@lru_cache(maxsize=16)
def _word(n: int, cap: int) -> PeanoWord:
    return build_word(n, cap=cap)


def _lemma3_values(word: bytes) -> tuple[int, int, int, int]:
    one = adjacency_stats(apply_transform(word, TransformKind.PHI1))
    two = adjacency_stats(apply_transform(word, TransformKind.PHI2))
    return (one.rises, one.descents, two.rises, two.descents)


def lemma3_prediction(word: bytes) -> tuple[int, int, int, int]:
    """Rise/descent counts of (phi1(w), phi2(w)) predicted from r(w), d(w).

    Defined for words 1...3 and 2...2.
    """
    stats = adjacency_stats(word)
    r, d = stats.rises, stats.descents
    if word[:1] == b"1" and word[-1:] == b"3":
        return (d + 1, r - 1, d, r)
    if word[:1] == b"2" and word[-1:] == b"2" and len(word) >= 2:
        return (d, r, d, r)
    raise DomainError(f"word {word[:20]!r} is not of the form 1...3 or 2...2")


def lemma3_holds(word: bytes) -> bool:
    return _lemma3_values(word) == lemma3_prediction(word)


def shaped_words(shape: str, length: int) -> Iterable[bytes]:
    """All words of the given length with end letters fixed by ``shape`` ("1X3" or "2Y2")."""
    head, tail = shape[0].encode(), shape[-1].encode()
    for middle in itertools.product(b"1234", repeat=length - 2):
        yield head + bytes(middle) + tail


def random_shaped_words(shape: str, count: int, max_length: int, seed: int) -> list[bytes]:
    rng = random.Random(f"{shape}:{seed}")
    head, tail = shape[0].encode(), shape[-1].encode()
    words = []
    for _ in range(count):
        length = rng.randint(2, max_length)
        words.append(head + bytes(rng.choice(b"1234") for _ in range(length - 2)) + tail)
    return words


def _cases(cfg: SuiteConfig) -> list[tuple]:
    cases: list[tuple] = []
    ns = range(1, cfg.max_n + 1)
    ls = range(0, cfg.max_l + 1)
    for suite in cfg.suites:
        if suite in ("frequencies", "rises"):
            cases += [(suite, n) for n in ns]
        elif suite == "powers":
            cases += [(suite, n, ell) for n in ns for ell in ls]
        elif suite in ("tables", "anchored"):
            cases += [(suite, n, ell, row) for row in TABLE_ROWS for n in ns for ell in ls]
        elif suite == "zeros":
            for x, y, z in itertools.product((1, 2, 3), repeat=3):
                for n in ns:
                    claimed = (x != z) if n % 2 == 0 else (x >= z)
                    if claimed or (x, y, z) == (2, 1, 3):
                        cases += [(suite, n, ell, (x, y, z)) for ell in range(1, max(cfg.max_l, 1) + 1)]
        elif suite == "lemma3":
            for shape in ("1X3", "2Y2"):
                cases += [(suite, "exhaustive", shape, length) for length in range(2, cfg.lemma3_max_length + 1)]
                cases.append((suite, "random", shape, 14))
            cases += [(suite, "word", n) for n in ns]
        elif suite == "recurrences":
            for n in range(1, cfg.recurrence_max_n + 1):
                cases += [(suite, n, name) for name in ("lemma1", "theorem4", "corollary2")]
    return cases


def _run_case(case: tuple, cfg: SuiteConfig) -> VerificationRecord:
    start = time.perf_counter()
    rec = _evaluate(case, cfg)
    rec.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
    return rec


def _label(case: tuple) -> tuple[int, str | None, int | None]:
    """(n, pattern, l) of an oracle-backed case."""
    suite = case[0]
    if suite == "lemma3":
        return case[2], "X_n", None
    if suite in ("frequencies", "rises"):
        return case[1], None, None
    if suite == "powers":
        return case[1], f"1^{case[2]}", case[2]
    if suite == "zeros":
        return case[1], pattern_notation("tau3", *case[3], case[2]), case[2]
    kind, x, y, z = case[3]
    return case[1], pattern_notation(kind, x, y, z, case[2]), case[2]


def _skipped(suite: str, n: int, pattern: str | None, ell: int | None) -> VerificationRecord:
    return VerificationRecord(suite, n, pattern, ell, None, None, None)


def _evaluate(case: tuple, cfg: SuiteConfig) -> VerificationRecord:
    suite = case[0]

    def record(n, pattern, ell, oracle, formula, suspect=False):
        o, f = _fmt(oracle), _fmt(formula)
        return VerificationRecord(suite, n, pattern, ell, o, f, o == f, suspect=suspect)

    if suite == "recurrences":
        _, n, name = case
        if name == "lemma1":
            return record(n, name, None, frequency_recurrence(n), frequency_formula(n))
        if name == "theorem4":
            return record(
                n, name, None, rises_descents_recurrence(n).as_tuple(), rises_descents_formula(n).as_tuple()
            )
        return record(n, name, 1, 4**n - 1, power_pattern_formula(n, 1))

    if suite == "lemma3" and case[1] != "word":
        _, mode, shape, length = case
        label = shape if mode == "exhaustive" else f"{shape}/random"
        if mode == "exhaustive":
            words = list(shaped_words(shape, length))
        else:
            words = random_shaped_words(shape, cfg.lemma3_random, length, cfg.seed)
        held = sum(lemma3_holds(w) for w in words)
        return record(length, label, None, held, len(words))

    n = case[2] if suite == "lemma3" else case[1]
    if n > cfg.cap:
        return _skipped(suite, *_label(case))
    try:
        word = _word(n, cfg.cap)
    except CapacityError:
        return _skipped(suite, *_label(case))

    if suite == "lemma3":
        return record(n, "X_n", None, _lemma3_values(word.data), lemma3_prediction(word.data))
    if suite == "frequencies":
        return record(n, None, None, letter_frequencies(word), frequency_formula(n))
    if suite == "rises":
        stats = adjacency_stats(word)
        return record(n, None, None, (stats.rises, stats.descents), rises_descents_formula(n).as_tuple())
    if suite == "powers":
        ell = case[2]
        if ell == 0:
            # one empty choice per letter value
            oracle = sum(count_embeddings(word.data, []) for _ in range(4))
        else:
            oracle = count_occurrences(word, f"1^{ell}")
        return record(n, f"1^{ell}", ell, oracle, power_pattern_formula(n, ell))
    if suite in ("tables", "anchored"):
        _, _, ell, (kind, x, y, z) = case
        notation = pattern_notation(kind, x, y, z, ell)
        oracle = count_occurrences(word, notation)
        if suite == "tables":
            suspect = (kind, x, y, z, parity_of(n)) in ERRATA
            return record(n, notation, ell, oracle, tau_table_value(kind, x, y, z, n, ell), suspect)
        freqs = letter_frequencies(word)
        formula = count_anchored_run(freqs, word.first, word.last, kind, x, y, z, ell)
        return record(n, notation, ell, oracle, formula)
    if suite == "zeros":
        _, _, ell, (x, y, z) = case
        notation = pattern_notation("tau3", x, y, z, ell)
        return record(n, notation, ell, count_occurrences(word, notation), 0)
    raise DomainError(f"unknown case {case!r}")


def _run_chunk(args):
    cases, cfg = args
    return [_run_case(c, cfg) for c in cases]


def run_suite(cfg: SuiteConfig) -> list[VerificationRecord]:
    cases = _cases(cfg)
    if cfg.workers == 1 or len(cases) < 2:
        records = [_run_case(c, cfg) for c in cases]
    else:
        # round-robin split so heavy cases spread across workers
        parts = [cases[i :: cfg.workers] for i in range(cfg.workers)]
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            records = [r for part in pool.map(_run_chunk, [(p, cfg) for p in parts if p]) for r in part]
    records.sort(key=VerificationRecord.sort_key)
    return records


def exit_status(records: Sequence[VerificationRecord]) -> int:
    mismatches = [r for r in records if r.match is False]
    if not mismatches:
        return EXIT_OK
    if all(r.suspect for r in mismatches):
        return EXIT_ERRATA_ONLY
    return EXIT_UNEXPECTED


def write_report(records: Iterable[VerificationRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(rec.to_json() + "\n")


def summarize(records: Sequence[VerificationRecord]) -> str:
    lines = []
    for suite in SUITES:
        recs = [r for r in records if r.suite == suite]
        if not recs:
            continue
        ok = sum(r.match is True for r in recs)
        bad = [r for r in recs if r.match is False]
        skipped = sum(r.skipped for r in recs)
        line = f"{suite:12s} {ok}/{len(recs)} matched"
        if skipped:
            line += f", {skipped} skipped"
        if bad:
            suspects = sum(r.suspect for r in bad)
            line += f", {len(bad)} mismatched ({suspects} known errata)"
        lines.append(line)
    return "\n".join(lines)
