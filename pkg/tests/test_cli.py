import json

from pgroupcoh.cli import run_cli


def test_compute_cyclic(tmp_path, capsys):
    out = tmp_path / "c9.json"
    assert run_cli(["compute", "--group", "C:9", "--coeff", "Z", "--max-degree", "6", "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    assert [r["invariants"] for r in data["cohomology"]] == ["Z", "0", "C9", "0", "C9", "0", "C9"]
    assert "H^6(C9; Z) = C9" in capsys.readouterr().out


def test_compute_fp_default_group(capsys):
    assert run_cli(["compute", "--coeff", "Fp", "--max-degree", "3"]) == 0
    text = capsys.readouterr().out
    assert "H^3(P(3,3); Z/3) = C3 + C3 + C3 + C3 + C3 + C3" in text


def test_verify_all(tmp_path):
    out = tmp_path / "all.json"
    assert run_cli(["verify", "--p", "3", "--n", "3", "--suite", "all", "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["status"] == "pass"
    suites = [r["suite"] for r in data["reports"]]
    assert suites == ["theorem3", "lemma4", "cor5", "extensions"]
    assert data["presentation"].startswith("P(3,3): generators A, B, C")
    again = tmp_path / "again.json"
    run_cli(["verify", "--p", "3", "--n", "3", "--suite", "all", "--json", str(again)])
    assert again.read_text() == out.read_text()


def test_verify_cor5_n4(tmp_path):
    out = tmp_path / "cor5.json"
    assert run_cli(["verify", "--p", "3", "--n", "4", "--suite", "cor5", "--json", str(out)]) == 0
    rep = json.loads(out.read_text())["reports"][0]
    munu = next(a for a in rep["assertions"] if a["id"] == "mu.nu")
    assert munu["computed"] == "zero" and munu["status"] == "pass"


def test_classify_extensions_cli():
    assert run_cli(["classify-extensions", "--p", "3", "--n", "4"]) == 0


def test_usage_errors():
    assert run_cli(["verify", "--suite", "bogus"]) == 2
    assert run_cli(["frobnicate"]) == 2
    assert run_cli(["compute", "--group", "X:3"]) == 2
    assert run_cli(["compute", "--coeff", "Q"]) == 2
    assert run_cli(["verify", "--p", "4"]) == 2
