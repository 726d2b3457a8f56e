import json
from pathlib import Path

from maxdepth.repro import (FAIL, INFO, PASS, format_rows, repro_suite, rows_document,
                            suite_transversal)

GOLDEN = Path(__file__).parent / "golden"


def test_bipartite_matches_golden():
    rows = rows_document(repro_suite("bipartite"))
    assert rows == json.loads((GOLDEN / "bipartite.json").read_text())


def test_line_suite_all_pass():
    rows = repro_suite("line", max_n=12)
    assert rows and all(r.status == PASS for r in rows)
    assert format_rows(rows).splitlines()[0] == "suite\tcase\texpected\tcomputed\tstatus"


def test_transversal_counterexample_is_info():
    rows = suite_transversal(count=3)
    flagged = [r for r in rows if r.case.startswith("n=3 sets=1,2;2,3 ") and r.status == INFO]
    assert flagged
    assert not any(r.status == FAIL for r in rows)


def test_deterministic():
    a = format_rows(repro_suite("terai", count=10))
    b = format_rows(repro_suite("terai", count=10))
    assert a == b


def test_whisker_reports_failures_honestly():
    rows = repro_suite("whisker")
    failed = sorted(r.case for r in rows if r.status == FAIL)
    assert failed == ["n=10 depth", "n=4 depth", "n=7 depth"]
