import json

import pytest

from peano_words.errors import DomainError
from peano_words.verify import (
    ERRATA,
    EXIT_ERRATA_ONLY,
    EXIT_OK,
    EXIT_UNEXPECTED,
    SuiteConfig,
    VerificationRecord,
    exit_status,
    lemma3_holds,
    lemma3_prediction,
    parse_suites,
    run_suite,
    write_report,
)

KEYS = ["suite", "n", "pattern", "l", "oracle", "formula", "match", "elapsed_ms"]


def test_rises_suite():
    records = run_suite(SuiteConfig(suites=("rises",), max_n=4))
    assert len(records) == 4
    assert all(r.match for r in records)
    assert [r.oracle for r in records] == ["2,0", "6,6", "26,24", "102,102"]


def test_frequencies_suite_n1():
    (rec,) = run_suite(SuiteConfig(suites=("frequencies",), max_n=1))
    assert rec.oracle == rec.formula == "1,1,1,0"
    assert rec.match


def test_tables_suite_reports_erratum():
    records = run_suite(SuiteConfig(suites=("tables",), max_n=2, max_l=1))
    by_key = {(r.n, r.pattern): r for r in records}
    rec = by_key[(2, "[1-1^1)")]
    assert (rec.oracle, rec.formula, rec.match) == ("4", "5", False)
    rec = by_key[(2, "[1-1^1-1]")]
    assert (rec.oracle, rec.formula, rec.match) == ("3", "2", False)
    assert all(r.suspect for r in records if r.match is False)
    assert exit_status(records) == EXIT_ERRATA_ONLY


def test_exit_status_levels():
    good = VerificationRecord("rises", 1, None, None, "2,0", "2,0", True)
    suspect = VerificationRecord("tables", 2, "[1-1^1)", 1, "4", "5", False, suspect=True)
    bad = VerificationRecord("tables", 3, "[1-2^1)", 1, "4", "5", False)
    skipped = VerificationRecord("tables", 13, "[1-2^1)", 1, None, None, None)
    assert exit_status([good, skipped]) == EXIT_OK
    assert exit_status([good, suspect]) == EXIT_ERRATA_ONLY
    assert exit_status([good, suspect, bad]) == EXIT_UNEXPECTED


def test_skipped_beyond_cap():
    records = run_suite(SuiteConfig(suites=("frequencies", "tables"), max_n=3, max_l=1, cap=2))
    skipped = [r for r in records if r.skipped]
    assert skipped and all(r.n == 3 for r in skipped)
    assert all(r.oracle is None and r.match is None for r in skipped)
    assert any(r.pattern == "[1-2^1)" for r in skipped)


def test_errata_manifest_contents():
    assert ERRATA == {
        ("tau1", 1, 1, None, "even"),
        ("tau2", 1, 1, None, "even"),
        ("tau3", 1, 1, 1, "even"),
    }


def test_parse_suites():
    assert parse_suites("all") == parse_suites("")
    assert parse_suites("rises, tables,rises") == ("rises", "tables")
    with pytest.raises(DomainError):
        SuiteConfig(suites=("nope",))


def test_report_format(tmp_path):
    records = run_suite(SuiteConfig(suites=("powers", "recurrences"), max_n=2, max_l=1, recurrence_max_n=3))
    path = tmp_path / "r.jsonl"
    write_report(records, str(path))
    lines = path.read_text().splitlines()
    assert len(lines) == len(records)
    for line in lines:
        obj = json.loads(line)
        assert list(obj) == KEYS
        assert obj["oracle"] is None or isinstance(obj["oracle"], str)


def test_big_counts_serialize_exactly():
    records = run_suite(SuiteConfig(suites=("recurrences",), recurrence_max_n=64))
    rec = next(r for r in records if r.n == 64 and r.pattern == "corollary2")
    assert rec.oracle == str(4**64 - 1)
    assert rec.match


def test_lemma3_helpers():
    assert lemma3_prediction(b"13") == (1, 0, 0, 1)
    assert lemma3_holds(b"1443213")
    assert lemma3_holds(b"2112")
    with pytest.raises(DomainError):
        lemma3_prediction(b"12")


def test_worker_count_does_not_change_records():
    cfg = dict(suites=("tables", "zeros", "lemma3"), max_n=4, max_l=2)
    one = run_suite(SuiteConfig(workers=1, **cfg))
    many = run_suite(SuiteConfig(workers=3, **cfg))
    strip = lambda rs: [(r.suite, r.n, r.pattern, r.l, r.oracle, r.formula, r.match) for r in rs]
    assert strip(one) == strip(many)
