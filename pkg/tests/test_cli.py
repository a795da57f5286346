import json
import shutil
import subprocess
import sys

import pytest

from icosahedral import cli


def run_cli(capsys, *argv):
    rc = cli.main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line]


def test_analyze_inline_json(capsys):
    rc, out, _ = run_cli(capsys, "analyze", "--b", "4", "--c", "16/5",
                         "--json")
    assert rc == 0
    record, report = json_lines(out)
    assert record["t"] == "1"
    assert record["hypothesis"] is True
    assert record["status"] == "ok"
    assert record["delta"] == "-64/125"
    assert record["disc"] == "589824"
    assert record["j_candidates"] == ["86048 - 38496*sqrt(5)",
                                      "86048 + 38496*sqrt(5)"]
    assert report["suite"] == "analyze"
    assert report["status"] == "pass"
    assert report["wall_time_ms"] is None


def test_analyze_second_table_row(capsys):
    rc, out, _ = run_cli(capsys, "analyze", "--b", "20", "--c", "-16")
    assert rc == 0
    record, = json_lines(out)
    assert record["t"] == "3/5"
    assert record["hypothesis"] is False
    assert record["j_candidates"] == ["10400 - 4640*sqrt(5)",
                                      "10400 + 4640*sqrt(5)"]


def test_analyze_quadratic_term(capsys):
    rc, out, _ = run_cli(capsys, "analyze", "--a", "1", "--b", "1",
                         "--c", "1")
    assert rc == 0
    record, = json_lines(out)
    assert record["quintic"] == "x^5 + x^2 + x + 1"
    # t is only defined for trinomials
    assert record["t"] is None and record["hypothesis"] is None


def test_analyze_batch_order_and_errors(tmp_path, capsys):
    path = tmp_path / "batch.jsonl"
    path.write_text(
        '{"B":"4","C":"16/5","label":"unit-square"}\n'
        '\n'
        '{"B":"20","C":"-16"}\n'
        '{"B":"0","C":"-4","label":"pure-fifth"}\n'
        '{"B":"1","C":"0"}\n')
    rc, out, _ = run_cli(capsys, "analyze", "--file", str(path), "--json")
    assert rc == 0
    lines = json_lines(out)
    records, report = lines[:-1], lines[-1]
    assert [r.get("label", r["quintic"]) for r in records] == \
        ["unit-square", "x^5 + 20x - 16", "pure-fifth", "x^5 + x"]
    assert records[2]["status"] == "error"
    assert records[2]["error"] == "degenerate quintic: delta = 0"
    assert records[2]["j_candidates"] is None
    assert records[3]["error"] == "C must be nonzero for t"
    assert [c["status"] for c in report["checks"]] == \
        ["pass", "pass", "skipped", "skipped"]
    assert report["status"] == "pass"


def test_analyze_text_mode_summary(capsys):
    rc, out, err = run_cli(capsys, "analyze", "--b", "4", "--c", "16/5")
    assert rc == 0
    record, = json_lines(out)
    assert record["t"] == "1"
    assert "1 record(s), 1 ok, 0 with errors" in err


def test_analyze_usage_errors(capsys):
    with pytest.raises(SystemExit) as exited:
        cli.main(["analyze", "--b", "4"])
    assert exited.value.code == 2
    with pytest.raises(SystemExit) as exited:
        cli.main(["analyze", "--file", "x.jsonl", "--c", "1"])
    assert exited.value.code == 2
    with pytest.raises(SystemExit) as exited:
        cli.main(["analyze", "--b", "0.5", "--c", "1"])
    assert exited.value.code == 2
    capsys.readouterr()


def test_analyze_parse_failures(tmp_path, capsys):
    bad = tmp_path / "bad.jsonl"
    bad.write_text("not json\n")
    rc, _, err = run_cli(capsys, "analyze", "--file", str(bad))
    assert rc == 2 and "bad.jsonl:1" in err
    floaty = tmp_path / "floaty.jsonl"
    floaty.write_text('{"B": 0.5, "C": "1"}\n')
    rc, _, err = run_cli(capsys, "analyze", "--file", str(floaty))
    assert rc == 2 and "exact rational" in err
    missing = tmp_path / "missing.jsonl"
    missing.write_text('{"B": "1"}\n')
    rc, _, err = run_cli(capsys, "analyze", "--file", str(missing))
    assert rc == 2 and "'C'" in err


def test_verify_hecke(capsys):
    rc, out, _ = run_cli(capsys, "verify", "hecke")
    assert rc == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    assert report["seed"] == 20260815
    assert report["options"] == {"samples": 20, "height": 1000}
    assert report["wall_time_ms"] is None
    by_id = {c["id"]: c for c in report["checks"]}
    assert set(by_id) == {"hecke/sigma-identity", "hecke/square-identity",
                          "hecke/positive-units", "hecke/value-group"}
    assert "zeta24^0" in by_id["hecke/value-group"]["witness"]


def test_verify_localfield(capsys):
    rc, out, _ = run_cli(capsys, "verify", "localfield")
    assert rc == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    assert all(c["status"] == "pass" for c in report["checks"])
    assert {c["id"] for c in report["checks"]} == {
        "localfield/artin-schreier", "localfield/square-unit-table",
        "localfield/hypothesis-triple", "localfield/family-squares"}


def test_verify_klein_link(capsys):
    rc, out, _ = run_cli(capsys, "verify", "klein-link", "--samples", "6")
    assert rc == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    random_check = report["checks"][1]
    assert random_check["witness"] == "6 seeded rational j values"


def test_verify_repn(capsys):
    rc, out, _ = run_cli(capsys, "verify", "repn")
    assert rc == 0
    report = json.loads(out)
    by_id = {c["id"]: c for c in report["checks"]}
    assert by_id["repn/group-order"]["status"] == "pass"
    assert by_id["repn/faithful"]["status"] == "pass"
    # the report must flag the unsatisfiable literal congruence reading
    assert "literal reading" in by_id["repn/congruence"]["witness"]
    assert "all 240 elements" in by_id["repn/congruence"]["witness"]


def test_verify_qcurve_options_recorded(capsys):
    rc, out, _ = run_cli(capsys, "verify", "qcurve", "--samples", "5",
                         "--seed", "7", "--height", "50")
    assert rc == 0
    report = json.loads(out)
    assert report["seed"] == 7
    assert report["options"] == {"samples": 5, "height": 50}
    by_id = {c["id"]: c for c in report["checks"]}
    assert by_id["qcurve/j-equation-family"]["witness"] == \
        "5 seeded rational t values"
    assert by_id["qcurve/hyperelliptic-points"]["witness"] == \
        "no points with height <= 50"


def test_verify_icosa(capsys):
    rc, out, _ = run_cli(capsys, "verify", "icosa")
    assert rc == 0
    report = json.loads(out)
    by_id = {c["id"]: c for c in report["checks"]}
    assert by_id["icosa/resolvent-grid"]["witness"] == \
        "36 rational (m, n) pairs"
    assert all(c["status"] == "pass" for c in report["checks"])


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli.hecke, "verify_sigma_identity", lambda: False)
    rc, out, _ = run_cli(capsys, "verify", "hecke")
    assert rc == 1
    report = json.loads(out)
    assert report["status"] == "fail"
    statuses = {c["id"]: c["status"] for c in report["checks"]}
    assert statuses["hecke/sigma-identity"] == "fail"
    assert statuses["hecke/square-identity"] == "pass"


def test_verify_timings_flag(capsys):
    rc, out, _ = run_cli(capsys, "verify", "hecke", "--timings")
    assert rc == 0
    assert isinstance(json.loads(out)["wall_time_ms"], int)


def test_verify_unknown_suite():
    with pytest.raises(SystemExit) as exited:
        cli.main(["verify", "nonsense"])
    assert exited.value.code == 2


def test_table(capsys):
    rc, out, _ = run_cli(capsys, "table")
    assert rc == 0
    report = json.loads(out)
    assert report["suite"] == "table"
    assert [c["status"] for c in report["checks"]] == ["pass"] * 5
    assert report["checks"][0]["witness"] == \
        "listed t = 15/11, 3/5; recomputed t = 15/11, 3/5"
    assert report["checks"][1]["witness"] == "listed t = 1; recomputed t = 1"


def test_out_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    rc, out, _ = run_cli(capsys, "verify", "localfield", "--out", str(path))
    assert rc == 0 and out == ""
    rc, stdout_text, _ = run_cli(capsys, "verify", "localfield")
    assert path.read_text(encoding="utf-8") == stdout_text


def test_reports_byte_stable_across_processes():
    cmd = [sys.executable, "-m", "icosahedral.cli", "verify", "hecke"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)["status"] == "pass"


def test_console_script_installed():
    exe = shutil.which("icosahedral")
    assert exe is not None
    done = subprocess.run([exe, "table"], capture_output=True, check=True)
    assert json.loads(done.stdout)["status"] == "pass"
