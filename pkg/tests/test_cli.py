import json

import pytest

from charprod.cli import EXIT_FAILED, EXIT_NO_CHARACTER, EXIT_OK, EXIT_SPEC, EXIT_TOO_LARGE, main


def run(tmp_path, *args):
    return main([*args, "--out", str(tmp_path)])


def test_table_c2(tmp_path, capsys):
    spec = tmp_path / "c2.json"
    spec.write_text(json.dumps({"type": "named", "name": "C2"}))
    assert run(tmp_path, "table", str(spec)) == EXIT_OK
    doc = json.loads((tmp_path / "c2.table.json").read_text())
    assert doc["degrees"] == [1, 1] and len(doc["values"]) == 2
    assert (tmp_path / "c2.table.md").exists()


def test_table_sl23_degrees_line(tmp_path, capsys):
    assert run(tmp_path, "table", "sl23") == EXIT_OK
    assert "degrees: 1 1 1 2 2 2 3" in capsys.readouterr().out


def test_table_tilde_gl23(tmp_path, capsys):
    assert run(tmp_path, "table", "tilde_gl23") == EXIT_OK
    out = capsys.readouterr().out
    assert "order 48" in out and "sum of squared degrees: 48" in out


def test_table_is_byte_stable(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(["table", "e27_c4", "--out", str(a)]) == EXIT_OK
    assert main(["table", "e27_c4", "--out", str(b)]) == EXIT_OK
    for name in ("e27_c4.table.json", "e27_c4.table.md"):
        assert (a / name).read_bytes() == (b / name).read_bytes()


def test_format_selects_one_file(tmp_path):
    assert run(tmp_path, "table", "q8", "--format", "markdown") == EXIT_OK
    assert sorted(p.name for p in tmp_path.iterdir()) == ["q8.table.md"]


def test_spec_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(tmp_path, "table", str(bad)) == EXIT_SPEC
    assert run(tmp_path, "table", "no_such_spec") == EXIT_SPEC
    bad.write_text(json.dumps({"type": "named", "name": "Nope"}))
    assert run(tmp_path, "eta", str(bad)) == EXIT_SPEC


def test_bound(tmp_path):
    assert run(tmp_path, "table", "e125_sl23", "--bound", "500") == EXIT_TOO_LARGE
    assert not any(tmp_path.iterdir())


def test_eta_q8(tmp_path, capsys):
    assert run(tmp_path, "eta", "q8", "--char", "2") == EXIT_OK
    doc = json.loads((tmp_path / "q8.eta.json").read_text())
    assert [c["eta"] for c in doc["characters"]] == [3]


def test_eta_c3_linear(tmp_path):
    spec = tmp_path / "c3.json"
    spec.write_text(json.dumps({"id": "c3", "type": "named", "name": "C3"}))
    assert run(tmp_path, "eta", str(spec), "--char", "1") == EXIT_OK
    doc = json.loads((tmp_path / "c3.eta.json").read_text())
    assert [c["eta"] for c in doc["characters"]] == [0, 0, 0]


def test_eta_wreath_2_2_reports_three_constituents(tmp_path):
    assert run(tmp_path, "eta", "wreath_2_2", "--char", "4") == EXIT_OK
    doc = json.loads((tmp_path / "wreath_2_2.eta.json").read_text())
    degrees = {tuple(sorted(c["degree"] for c in ch["constituents"] if c["index"] != 0)) for ch in doc["characters"]}
    assert {ch["eta"] for ch in doc["characters"]} == {3}
    assert degrees == {(3, 6, 6)}


def test_eta_missing_degree(tmp_path):
    assert run(tmp_path, "eta", "c3", "--char", "5") == EXIT_NO_CHARACTER
    assert run(tmp_path, "eta", "c3", "--index", "9") == EXIT_NO_CHARACTER


def test_verify_commands(tmp_path):
    assert run(tmp_path, "verify-a", "gl23") == EXIT_OK
    doc = json.loads((tmp_path / "gl23.verify-a.json").read_text())
    assert [v["case"] for v in doc["verdicts"]] == ["i", "i"]
    assert run(tmp_path, "verify-b", "d32") == EXIT_OK
    doc = json.loads((tmp_path / "d32.verify-b.json").read_text())
    assert {v["subcase"] for v in doc["verdicts"]} == {"nilpotent"}


def test_scan(tmp_path):
    assert run(tmp_path, "scan", "c2", "d16") == EXIT_OK
    doc = json.loads((tmp_path / "scan.json").read_text())
    assert [g["id"] for g in doc["groups"]] == ["c2", "d16"]
    assert len(doc["records"]) == 2 + 7


def test_empty_corpus_suite(tmp_path):
    assert run(tmp_path, "paper-suite", "--corpus") == EXIT_OK
    doc = json.loads((tmp_path / "paper-suite.json").read_text())
    assert doc["summary"] == {"rows": 0, "passed": 0, "failed": 0}


def test_corpus_override_runs_properties_only(tmp_path):
    assert run(tmp_path, "paper-suite", "--corpus", "sl23", "d16") == EXIT_OK
    doc = json.loads((tmp_path / "paper-suite.json").read_text())
    assert [c["key"] for c in doc["criteria"]] == ["corpus-properties"]
    assert doc["summary"]["failed"] == 0 and doc["summary"]["rows"] == 8


def test_suite_failure_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"id": "big", "type": "named", "name": "SL(2,5)"}))
    assert run(tmp_path, "paper-suite", "--corpus", str(bad), "--bound", "60") == EXIT_FAILED


def test_help(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--help"])
    assert info.value.code == 0
    out = capsys.readouterr().out
    for command in ("table", "eta", "verify-a", "verify-b", "scan", "paper-suite"):
        assert command in out
