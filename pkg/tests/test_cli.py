import io
import json
import subprocess
import sys

import pytest

from matfit.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_fit_both(table1_path, capsys):
    code, out, err = run(["fit", "--input", str(table1_path), "--degree", "3", "--backend", "both"], capsys)
    assert code == 0
    doc = json.loads(out)
    for rep in doc["reports"]:
        assert rep["sse"] == pytest.approx(128.1999, abs=0.05)


def test_underdetermined(table1_path, capsys):
    code, out, err = run(["fit", "--input", str(table1_path), "--degree", "7"], capsys)
    assert code == 3 and out == "" and "SingularSystem" in err


def test_qr_underdetermined(table1_path, capsys):
    code, out, _ = run(["fit", "--input", str(table1_path), "--degree", "7", "--backend", "qr"], capsys)
    assert code == 3 and out == ""


def test_negative_degree(table1_path, capsys):
    code, out, _ = run(["fit", "--input", str(table1_path), "--degree", "-1"], capsys)
    assert code == 2 and out == ""


@pytest.mark.parametrize("argv", [
    [],
    ["fit", "--degree", "2"],
    ["fit", "--input", "x.csv", "--degree", "two"],
    ["fit", "--input", "x.csv", "--degree", "1", "--backend", "svd"],
    ["frobnicate"],
])
def test_usage_errors(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 2 and out == ""


def test_degree_too_high(table1_path, capsys):
    code, out, err = run(["fit", "--input", str(table1_path), "--degree", "13"], capsys)
    assert code == 3 and "DegreeTooHigh" in err


def test_missing_file(tmp_path, capsys):
    code, out, _ = run(["fit", "--input", str(tmp_path / "nope.csv"), "--degree", "1"], capsys)
    assert code == 2 and out == ""


def test_bad_csv(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("1,2\n3,4,5\n")
    code, out, err = run(["fit", "--input", str(bad), "--degree", "1"], capsys)
    assert code == 2 and out == "" and "line 2" in err


def test_stdin(table1_path, capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(table1_path.read_text()))
    code, out, _ = run(["fit", "--input", "-", "--degree", "1", "--backend", "qr"], capsys)
    assert code == 0 and json.loads(out)["backend"] == "qr"


def test_output_file_and_determinism(table1_path, tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        argv = ["fit", "--input", str(table1_path), "--degree", "2", "--chunks", "3", "--output", str(p)]
        assert run(argv, capsys)[:2] == (0, "")
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_gen_then_fit(tmp_path, capsys):
    csv = tmp_path / "syn.csv"
    assert main(["gen", "--points", "200", "--degree", "2", "--noise", "0", "--seed", "5",
                 "--output", str(csv)]) == 0
    code, out, _ = run(["fit", "--input", str(csv), "--degree", "2"], capsys)
    assert code == 0
    from matfit import true_polynomial
    expected = true_polynomial(2, 5).coefficients
    assert json.loads(out)["coefficients"] == pytest.approx(expected.tolist(), abs=1e-9)


def test_bench(capsys):
    code, out, _ = run(["bench", "--points", "2000", "--degree", "3", "--chunks", "2",
                        "--repeat", "3", "--seed", "1"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["valid"] and doc["chunks"] == 2


def test_bench_bad_repeat(capsys):
    assert run(["bench", "--points", "100", "--degree", "2", "--chunks", "1", "--repeat", "2",
                "--seed", "0"], capsys)[0] == 2


def test_module_entry_point(table1_path):
    proc = subprocess.run([sys.executable, "-m", "matfit", "fit", "--input", str(table1_path),
                           "--degree", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["degree"] == 1
