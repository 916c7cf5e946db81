"""Acceptance gate: every reproduction criterion at its stated tolerance and time budget.

The suite runs once through the library (to get per-criterion timings) and
once through the command line; the two reports must be byte-identical.
"""

import pytest

from charprod.cli import main
from charprod.report import dumps_json
from charprod.suite import CRITERIA, SuiteContext, run_suite, suite_markdown, suite_to_dict


@pytest.fixture(scope="session")
def suite_run():
    ctx = SuiteContext(include_stretch=True)
    results = run_suite(ctx)
    return ctx, {r.key: r for r in results}


@pytest.fixture(scope="session")
def cli_report(tmp_path_factory):
    out = tmp_path_factory.mktemp("paper-suite")
    code = main(["paper-suite", "--include-stretch", "--out", str(out)])
    return code, out


def announce(capsys, line):
    with capsys.disabled():
        print(f"\n[acceptance] {line}")


@pytest.mark.parametrize("key", [c.key for c in CRITERIA])
def test_criterion(key, suite_run, capsys):
    _, results = suite_run
    res = results[key]
    failed = [r for r in res.rows if not r.passed]
    status = "PASS" if res.passed and res.within_budget else "FAIL"
    announce(capsys, f"{status} {key}: {len(res.rows) - len(failed)}/{len(res.rows)} rows, "
                     f"{res.seconds:.1f}s of {res.budget:.0f}s")
    for r in failed:
        announce(capsys, f"  failed row: {r.claim} | expected {r.expected} | computed {r.computed}")
    assert res.rows, "criterion produced no rows"
    assert not failed, "; ".join(f"{r.claim}: computed {r.computed}" for r in failed)
    assert res.within_budget, f"took {res.seconds:.1f}s, budget {res.budget}s"


def test_reports_are_byte_identical(suite_run, cli_report, capsys):
    ctx, results = suite_run
    code, out = cli_report
    ordered = [results[c.key] for c in CRITERIA]
    same_json = (out / "paper-suite.json").read_text() == dumps_json(suite_to_dict(ordered, ctx))
    same_md = (out / "paper-suite.md").read_text() == suite_markdown(ordered, ctx)
    announce(capsys, f"{'PASS' if same_json and same_md else 'FAIL'} two-run-determinism: "
                     f"json {'identical' if same_json else 'differs'}, markdown {'identical' if same_md else 'differs'}")
    assert same_json and same_md


def test_cli_exit_code_matches_rows(suite_run, cli_report):
    _, results = suite_run
    code, _ = cli_report
    all_pass = all(r.passed for r in results.values())
    assert code == (0 if all_pass else 1)
