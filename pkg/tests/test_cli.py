import csv
import io
import json

import pytest

from taumax.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_critical_json(capsys):
    code, out, _ = run(capsys, "critical", "--x", "2", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["schema_version"] == "1" and d["command"] == "critical"
    assert d["alpha"] == pytest.approx(0.264076, abs=1e-6)
    assert d["bracket_lo"] <= d["t_star"] <= d["bracket_hi"]


def test_critical_domain_error(capsys):
    code, out, err = run(capsys, "critical", "--x", "0.5")
    assert code == 2
    assert "x must be ≥ 1" in err


def test_critical_domain_error_json(capsys):
    code, out, err = run(capsys, "critical", "--x", "0.5", "--format", "json")
    assert code == 2
    assert "error" in json.loads(out)
    assert err


def test_solver_failure_exit(capsys):
    code, _, err = run(capsys, "critical", "--x", "7.3", "--max-iter", "1")
    assert code == 3
    assert err


def test_bad_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["critical"])
    assert exc.value.code == 2


def test_limit_json(capsys):
    code, out, _ = run(capsys, "limit", "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert d["alpha_star"] == pytest.approx(0.2984256075, abs=1e-10)
    assert set(d) >= {"a0", "x0", "ell", "alpha_star", "eta_residual"}


def test_sequence_csv(capsys):
    code, out, err = run(capsys, "sequence", "--n-max", "50", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "t_n", "alpha_n", "ratio", "gap"]
    assert len(rows) == 51
    assert rows[1][:3] == ["1", "1", "0.25"]
    assert "PASS t_increasing" in err


def test_sequence_log_json(capsys):
    code, out, _ = run(capsys, "sequence", "--n-max", "100000", "--sampling", "log", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["all_passed"]
    assert d["rows"][-1]["n"] == 100000
    assert {c["key"] for c in d["claims"]} >= {"t_increasing", "bounds", "cross_index_sign"}


def test_verify_cm_pass_and_fail(capsys):
    code, out, _ = run(capsys, "verify-cm", "--beta-from-limit", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["all_passed"] and len(d["reports"]) == 7
    code, out, _ = run(capsys, "verify-cm", "--beta", "0.9", "--format", "json")
    assert code == 4
    assert not json.loads(out)["all_passed"]


def test_verify_cm_grid_parsing(capsys):
    code, out, _ = run(capsys, "verify-cm", "--beta", "0.5", "--grid", "1,2", "3", "--format", "json")
    assert code == 0
    assert [r["x"] for r in json.loads(out)["reports"]] == [1.0, 2.0, 3.0]


def test_verify_cm_bad_point(capsys):
    code, _, err = run(capsys, "verify-cm", "--beta", "0.5", "--grid", "-1.5")
    assert code == 2
    assert err


def test_figures(capsys, tmp_path):
    code, out, _ = run(capsys, "figure", "1", "--points", "11")
    assert code == 0
    blocks = [b for b in out.strip().split("\n\n")]
    assert len(blocks) == 2
    data = [l for l in blocks[0].splitlines() if not l.startswith("#")]
    assert len(data) == 11
    dest = tmp_path / "f2.txt"
    code, out, _ = run(capsys, "figure", "2", "--points", "61", "--out", str(dest))
    assert code == 0 and out == ""
    text = dest.read_text()
    assert text.count("# ") >= 4
    assert len([b for b in text.strip().split("\n\n")]) == 4


def test_deterministic_output(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        assert main(["sequence", "--n-max", "200", "--format", "csv", "--out", str(p)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_digits_flag(capsys):
    _, out, _ = run(capsys, "critical", "--x", "2", "--format", "csv", "--digits", "4")
    assert "0.2641" in out
