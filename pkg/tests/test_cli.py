import json
import subprocess
import sys

import pytest

from gencheeger.cli import main


@pytest.fixture
def files(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(["gen", "path", "3", "--out", "p3.gr"]) == 0
    assert main(["gen", "demand-of", "p3.gr", "--out", "d.gr"]) == 0
    assert main(["gen", "st-edge", "3", "0", "2", "--out", "st.gr"]) == 0
    (tmp_path / "x.vec").write_text("1\n0\n-1\n")
    return tmp_path


def run_json(capsys, argv):
    code = main(argv + ["--json"])
    return code, json.loads(capsys.readouterr().out)


def test_gen_files(files):
    assert (files / "p3.gr").read_text() == "p 3 2\ne 0 1 1\ne 1 2 1\n"
    assert (files / "d.gr").read_text() == "p 3 3\ne 0 1 0.5\ne 0 2 0.25\ne 1 2 0.5\n"
    assert (files / "st.gr").read_text() == "p 3 1\ne 0 2 1\n"


def test_gen_other_families(files, capsys):
    assert main(["gen", "kn-identity", "3"]) == 0
    assert capsys.readouterr().out.startswith("p 3 3\ne 0 1 0.333")
    assert main(["gen", "grid", "3", "3", "--weights", "random", "--seed", "4"]) == 0
    assert capsys.readouterr().out.startswith("p 9 12\n")
    assert main(["gen", "gnp", "6", "0.5", "--seed", "7", "--out", "a.gr"]) == 0
    assert main(["gen", "gnp", "6", "0.5", "--seed", "7", "--out", "b.gr"]) == 0
    assert (files / "a.gr").read_bytes() == (files / "b.gr").read_bytes()


@pytest.mark.parametrize(
    "argv",
    [
        ["gen", "path", "1"],
        ["gen", "gnp", "5", "2.0"],
        ["gen", "st-edge", "3", "1", "1"],
        ["gen", "nosuch", "3"],
        ["gen", "path", "x"],
        ["phi", "missing.gr"],
    ],
)
def test_input_errors_exit_1(files, argv):
    assert main(argv) == 1


def test_phi(files, capsys):
    assert run_json(capsys, ["phi", "p3.gr"])[1]["value"] == 1.0
    assert run_json(capsys, ["phi", "p3.gr", "--against", "st.gr"])[1] == {"value": 1.0, "cut": [0]}
    assert run_json(capsys, ["phi", "p3.gr", "--iso"])[1]["value"] == 1.0
    assert run_json(capsys, ["phi", "p3.gr", "--st", "0", "2"])[1]["value"] == 1.0
    assert main(["phi", "p3.gr"]) == 0
    assert capsys.readouterr().out == "value 1\ncut 0\n"


def test_phi_guard(files):
    assert main(["gen", "path", "21", "--out", "big.gr"]) == 0
    assert main(["phi", "big.gr"]) == 1
    assert main(["phi", "big.gr", "--max-n", "21"]) == 0


def test_eig(files, capsys):
    code, doc = run_json(capsys, ["eig", "p3.gr", "d.gr", "--eps", "0.05", "--seed", "1"])
    assert code == 0 and 1 - 1e-9 <= doc["lambda"] <= 1.05
    assert doc["trace"] and doc["restarts"] == 7
    code, doc = run_json(capsys, ["eig", "p3.gr", "st.gr", "--eps", "0.05", "--seed", "1"])
    assert 0.5 * (1 - 1e-9) <= doc["lambda"] <= 0.525
    argv = ["eig", "p3.gr", "d.gr", "--seed", "1", "--json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_eig_writes_vector(files, capsys):
    assert main(["eig", "p3.gr", "st.gr", "--out", "ev.vec"]) == 0
    assert len((files / "ev.vec").read_text().splitlines()) == 3


def test_eig_numerical_failure_exit_2(files):
    assert main(["gen", "path", "40", "--out", "p40.gr"]) == 0
    assert main(["gen", "demand-of", "p40.gr", "--out", "d40.gr"]) == 0
    argv = ["eig", "p40.gr", "d40.gr", "--precond", "none", "--cg-tol", "1e-15"]
    assert main(argv) == 2


def test_sweep(files, capsys):
    code, doc = run_json(capsys, ["sweep", "p3.gr", "d.gr", "--vector", "x.vec"])
    assert doc["cut"] == [2] and abs(doc["ratio"] - 4 / 3) < 1e-15
    assert doc["cap_g"] == 1.0 and doc["cap_h"] == 0.75
    assert run_json(capsys, ["sweep", "p3.gr", "p3.gr", "--vector", "x.vec"])[1]["ratio"] == 1.0
    code, doc = run_json(capsys, ["sweep", "p3.gr", "st.gr", "--from-eig", "--seed", "1"])
    assert doc["ratio"] == 1.0
    (files / "short.vec").write_text("1\n2\n")
    assert main(["sweep", "p3.gr", "d.gr", "--vector", "short.vec"]) == 1


def test_verify(files, capsys):
    assert main(["verify", "p3.gr", "--checks", "reductions"]) == 0
    out = capsys.readouterr().out
    assert out.rstrip().endswith("overall PASS")
    argv = ["verify", "p3.gr", "d.gr", "--checks", "theorem,sweep,eigensolver"]
    code, doc = run_json(capsys, argv + ["--samples", "50", "--seed", "1"])
    assert code == 0 and doc["overall_pass"] is True
    assert doc["graphs"] == [{"file": "p3.gr", "n": 3, "m": 2}, {"file": "d.gr", "n": 3, "m": 3}]
    assert sum(c["name"].startswith("theorem_vector") for c in doc["checks"]) == 50


def test_verify_broken_file(files):
    (files / "broken.gr").write_text("p 3 2\ne 0 1 1\ne 0 1 2\n")
    assert main(["verify", "broken.gr"]) == 1


def test_verify_failure_exit_3(files, monkeypatch):
    from gencheeger import verify

    real = verify.check_reductions

    def sabotaged(g, limit=verify.DEFAULT_LIMIT):
        return real(g, limit) + [verify.compare("forced", 0.0, ">=", 1.0)]

    monkeypatch.setattr(verify, "check_reductions", sabotaged)
    assert main(["verify", "p3.gr", "--checks", "reductions"]) == 3


def test_verify_writes_report(files):
    argv = ["verify", "p3.gr", "d.gr", "--samples", "5", "--seed", "3", "--out"]
    assert main(argv + ["r1.json"]) == 0
    assert main(argv + ["r2.json"]) == 0
    assert (files / "r1.json").read_bytes() == (files / "r2.json").read_bytes()


def test_bad_flag_exit_1(files):
    assert main(["phi", "p3.gr", "--bogus"]) == 1
    assert main(["--help"]) == 0


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "gencheeger", "phi", "p3.gr", "--json"],
        capture_output=True,
        text=True,
        cwd=files,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"value": 1.0, "cut": [0]}
