import json
import subprocess
import sys

import pytest

from nilclean.cli import OUT_DIR_ENV, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_z6(capsys):
    code, out, _ = run(capsys, "classify", "Z6")
    assert code == 0
    assert "|nil_clean| = 4: {0, 1, 3, 4}" in out
    assert "|idempotents| = 4" in out and "|units| = 2" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--ring", "Z10", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["sizes"]["nil_clean"] == 4
    code, out, _ = run(capsys, "classify", "GF2^2", "--format", "json")
    assert json.loads(out)["sizes"]["nil_clean"] == 2


def test_bad_ring_spec(capsys):
    code, _, err = run(capsys, "classify", "Z1")
    assert code != 0 and "Z1" in err
    code, _, err = run(capsys, "classify", "--ring", "GF4")
    assert code != 0 and "GF4" in err
    with pytest.raises(SystemExit) as exc:
        main(["classify"])
    assert exc.value.code != 0


def test_graph_dot_figure1(capsys):
    code, out, _ = run(capsys, "graph", "Z6", "nilclean", "dot")
    assert code == 0
    vertices = [ln for ln in out.splitlines() if ln.strip().endswith('";') and "--" not in ln]
    edges = {ln.strip() for ln in out.splitlines() if "--" in ln}
    assert len(vertices) == 5
    assert edges == {
        '"1" -- "3";', '"1" -- "4";', '"2" -- "3";', '"2" -- "5";', '"3" -- "4";', '"3" -- "5";',
    }


def test_graph_json_zerodiv(capsys):
    code, out, _ = run(capsys, "graph", "Z6", "zerodiv", "json")
    data = json.loads(out)
    pairs = [[data["vertices"][i], data["vertices"][j]] for i, j in data["edges"]]
    assert code == 0 and pairs == [["2", "3"], ["3", "4"]]
    code, out, _ = run(capsys, "graph", "--ring", "Z2", "--format", "json")
    assert json.loads(out)["vertices"] == []


def test_graph_to_file_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.dot", tmp_path / "b.dot"
    assert run(capsys, "graph", "--ring", "Z30", "--kind", "nilclean", "--format", "dot", "--out", str(a))[0] == 0
    assert run(capsys, "graph", "--ring", "Z30", "--format", "dot", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_graph_rejections(capsys):
    code, _, err = run(capsys, "graph", "Z6", "idem:2")
    assert code != 0 and "not idempotent" in err
    code, _, err = run(capsys, "graph", "Z6", "beck")
    assert code != 0 and "unknown graph kind" in err


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "Z15")
    data = json.loads(out)
    assert code == 0
    assert (data["diameter"], data["clique_number"], data["domination_number"]) == (3, 3, 2)
    assert data["min_dominating_sets"] == [["5", "10"]]
    code, out, _ = run(capsys, "invariants", "Z7")
    assert json.loads(out)["diameter"] == "inf"


def test_verify_examples(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--claims", "Thm3.3", "--primes-to", "97")
    assert code == 0 and "Thm3.3" in out and "FAIL" in out
    assert "failures:" not in out
    code, out, _ = run(capsys, "verify", "--claims", "Cor2.3", "--rings", "Z5", "--out", str(tmp_path))
    assert code == 10
    report = json.loads((tmp_path / "report.json").read_text())
    assert [(f["claim"], f["ring"]) for f in report["failures"]] == [("Cor2.3.1", "Z5")]
    assert (tmp_path / "report.txt").read_text() == out
    code, out, _ = run(capsys, "verify", "--claims", "none")
    assert code == 0


def test_verify_unknown_claim(capsys):
    code, _, err = run(capsys, "verify", "--claims", "Thm9.9")
    assert code == 1
    assert "Thm9.9" in err and "Thm3.3" in err


def test_verify_env_out_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(OUT_DIR_ENV, str(tmp_path / "reports"))
    code, _, _ = run(capsys, "verify", "--claims", "Fig1", "--rings", "Z6")
    assert code == 0
    assert json.loads((tmp_path / "reports" / "report.json").read_text())["exit_code"] == 0


def test_sweep(capsys, tmp_path):
    code, out, _ = run(capsys, "sweep", "--max-n", "12", "--claims", "Thm2.4,Thm2.5", "--out", str(tmp_path))
    assert code == 0
    data = json.loads((tmp_path / "report.json").read_text())
    assert data["claims"] == ["Thm2.4", "Thm2.5"]
    assert len(data["results"]) == 2 * (11 + 7)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nilclean", "verify", "--claims", "Thm2.9", "--rings", "GF2^2,Z5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 10
    assert "[known] Thm2.9.m1 on GF2^2" in proc.stdout
    assert "[known] Thm2.9.m2 on Z5" in proc.stdout
