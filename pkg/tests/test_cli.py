import json
import subprocess
import sys

import pytest

from fsing.cli import main, parse_window

EX2 = ("x0^2*x1*x2*x3*x4 + x0*x1^2*x2*x3*x4 + x0*x1*x2^2*x3*x4"
       " + x0*x1*x2*x3^2*x4 + x0*x1*x2*x3*x4^2 + x5^6")


def run(capsys, *argv):
    code = main(list(argv) + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_delta_job_example_2(capsys):
    code, rep = run(capsys, "delta", "--p", "2", "--n", "5", "--f", EX2, "--e-max", "2")
    assert code == 0
    assert rep["schema"] == "fsing-report/1" and rep["command"] == "delta"
    res = rep["result"]
    assert res["delta"] == -8 and res["status"] == "Certified"
    assert res["sequence"] == [[1, -7], [2, -8]] and res["ellMin"] == 3
    assert rep["input"]["degree"] == 6 and rep["input"]["options"]["eMax"] == 2


def test_isolated_job_cusp(capsys):
    code, rep = run(capsys, "isolated", "--p", "2", "--n", "1", "--f", "x0^2*x1 + x0*x1^2")
    assert code == 0
    assert rep["result"] == {"fPureAtM": False, "isolated": True, "ellMin": 1}


def test_fedder_job(capsys):
    code, rep = run(capsys, "fedder", "--p", "3", "--n", "1", "--f", "x0*x1")
    assert code == 0 and rep["result"]["fPureAtM"] is True


def test_injectivity_and_witness_jobs(capsys):
    code, rep = run(capsys, "injectivity", "--p", "2", "--n", "1", "--f", "x0^2*x1 + x0*x1^2")
    assert code == 0 and rep["result"]["bound"] == 1
    code, rep = run(capsys, "injectivity", "--p", "2", "--n", "1", "--f", "x0^2*x1")
    assert code == 0 and rep["result"]["bound"] is None
    assert rep["result"]["deltaStatus"] == "UnboundedDetected"
    code, rep = run(capsys, "witness", "--p", "2", "--n", "1", "--f", "x0^2*x1 + x0*x1^2")
    assert code == 0 and rep["result"]["alpha"] == "1/(x0*x1)" and rep["result"]["degree"] == 1


def test_kernel_dims_job_agrees(capsys):
    code, rep = run(capsys, "kernel-dims", "--p", "3", "--n", "2",
                    "--f", "x0^2*x1^2 + x1^2*x2^2 + x2^2*x0^2", "--window=-3..2")
    assert code == 0
    rows = rep["result"]["kernels"]
    assert [r["t"] for r in rows] == list(range(-3, 3))
    assert all(r["agree"] for r in rows)
    assert {r["t"]: r["direct"] for r in rows}[1] == 1


def test_infinity_serialized(capsys):
    code, rep = run(capsys, "me", "--p", "3", "--n", "1", "--f", "x0*x1")
    assert code == 0 and rep["result"]["Me"] == "infinity"


def test_f_file(capsys, tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("x0^2*x1 + x0*x1^2\n")
    code, rep = run(capsys, "isolated", "--p", "2", "--n", "1", "--f-file", str(path))
    assert code == 0 and rep["input"]["f"] == "x0^2*x1 + x0*x1^2"


@pytest.mark.parametrize("argv", [
    ["delta", "--p", "4", "--n", "1", "--f", "x0*x1"],
    ["delta", "--p", "2", "--n", "1", "--f", "x0^2 + x1"],
    ["delta", "--p", "2", "--n", "1", "--f", "x0 + + x1"],
    ["delta", "--p", "2", "--n", "1", "--f", "x3"],
    ["delta", "--p", "2", "--n", "1", "--f-file", "/nonexistent/f.txt"],
    ["hn-dims", "--p", "2", "--n", "1", "--f", "x0*x1", "--window", "5..1"],
])
def test_validation_errors_exit_2(capsys, argv):
    code = main(argv + ["--json"])
    rep = json.loads(capsys.readouterr().out)
    assert code == 2 and "error" in rep


def test_argparse_failure_exit_2(capsys):
    assert main(["delta", "--n", "1"]) == 2
    capsys.readouterr()


def test_resource_guard_exit_3(capsys):
    code, rep = run(capsys, "delta", "--p", "2", "--n", "5", "--f", EX2, "--max-dim", "8")
    assert code == 3 and rep["error"]["type"] == "ResourceLimit"


def test_env_max_dim(capsys, monkeypatch):
    monkeypatch.setenv("FSING_MAX_DIM", "8")
    code, rep = run(capsys, "delta", "--p", "2", "--n", "5", "--f", EX2)
    assert code == 3
    monkeypatch.setenv("FSING_MAX_DIM", "100000")
    code, rep = run(capsys, "isolated", "--p", "2", "--n", "1", "--f", "x0^2*x1")
    assert code == 0 and rep["input"]["options"]["maxDim"] == 100000


@pytest.mark.parametrize("argv", [["repro-example-1"], ["repro-example-1", "--p", "5"],
                                  ["repro-example-2"]])
def test_repro_commands(capsys, argv):
    code, rep = run(capsys, *argv)
    assert code == 0 and rep["result"]["ok"]
    assert all(c["ok"] for c in rep["result"]["checks"])


def test_repro_example_1_rejects_p2(capsys):
    assert main(["repro-example-1", "--p", "2", "--json"]) == 2
    capsys.readouterr()


def test_text_output(capsys):
    assert main(["isolated", "--p", "2", "--n", "1", "--f", "x0^2*x1"]) == 0
    out = capsys.readouterr().out
    assert "isolated: False" in out


def test_parse_window():
    assert parse_window("-3..2") == (-3, 2)
    with pytest.raises(ValueError):
        parse_window("3-4")


def test_deterministic_bytes():
    cmd = [sys.executable, "-m", "fsing", "delta", "--p", "2", "--n", "5", "--f", EX2,
           "--e-max", "2", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and b'"Certified"' in a
