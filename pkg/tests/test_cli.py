import json
import subprocess
import sys
from fractions import Fraction

import pytest

from golden import K4_TERMS, from_named_terms
from kirchhoff.cli import InputError, main, parse_point
from kirchhoff.poly import parse_polynomial


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), out


def test_parse_point():
    assert tuple(parse_point("1,1,1")) == (1, 1, 1)
    assert tuple(parse_point("3/7,2,5/2")) == (Fraction(3, 7), 2, Fraction(5, 2))
    for bad in ["1/0", "1,,2", "", "1.5", "a"]:
        with pytest.raises(InputError):
            parse_point(bad)


def test_kirchhoff_k4(capsys):
    code, doc, _ = run_json(capsys, "kirchhoff", "K4")
    assert code == 0 and doc["verdict"] is True
    assert doc["schema"] == 1 and doc["seed"] == 0 and doc["trials"] == 20
    det, enum, summary = doc["results"]
    assert det["polynomial"] == enum["polynomial"]
    assert parse_polynomial(det["polynomial"], 6) == from_named_terms(K4_TERMS)
    assert det["terms"] == 16 and summary["match"] and summary["spanning_trees"] == 16


def test_kirchhoff_text_and_removal(capsys):
    code, out, _ = run(capsys, "kirchhoff", "--graph", "K4-2.3")
    assert code == 0 and "spanning trees: 8" in out and "verdict: PASS" in out


def test_hessian_identity_symbolic(capsys):
    code, doc, _ = run_json(capsys, "hessian-identity", "--r", "3", "--mode", "symbolic")
    assert code == 0
    main_rep, ones = doc["results"]
    assert main_rep["verdict"] and main_rep["details"]["constant"] == -16
    assert main_rep["details"]["exponent"] == 2
    assert ones["details"]["value"] == "-4096" and ones["details"]["first_form"] == "-2048"
    assert ones["notes"]


def test_slp_k4(capsys):
    code, doc, _ = run_json(capsys, "slp", "--graph", "K4", "--point", "1,1,1,1,1,1")
    assert code == 0
    assert doc["results"][0]["slp"] is True and doc["results"][0]["inertia"] == [1, 5, 0]


def test_negative_verdict_exits_one(capsys):
    remark = "1*x1*x2 + 1*x1*x3 + 4*x1*x4 + 1*x2*x3 + 1*x2*x4 + 1*x3*x4"
    code, doc, _ = run_json(capsys, "slp", "--poly", remark)
    assert code == 1 and doc["verdict"] is False and doc["results"][0]["kernel_dim"] == 1
    code, _, _ = run(capsys, "logconcavity", "--poly", remark, "--mode", "strict")
    assert code == 1
    code, _, _ = run(capsys, "hodge-riemann", "--poly", remark)
    assert code == 1


def test_logconcavity_and_identities(capsys):
    code, doc, _ = run_json(capsys, "logconcavity", "K4", "--point", "1,2,3,1/2,1,1")
    assert code == 0 and doc["params"]["point_class"] == "positive"
    assert doc["results"][0]["s"] == "2/3" and doc["results"][0]["quantified"]
    code, doc, _ = run_json(capsys, "logconcavity", "K4", "--s", "4/5")
    assert code == 0 and doc["results"][0]["s"] == "4/5"
    assert run(capsys, "euler", "C5")[0] == 0
    assert run(capsys, "identity1", "K4", "--trials", "3")[0] == 0
    assert run(capsys, "cayley", "--r", "4")[0] == 0
    assert run(capsys, "hodge-riemann", "K4-1.2", "--point", "1,2,3,4,5")[0] == 0
    assert run(capsys, "trees", "C4", "--list")[0] == 0


def test_sweep(capsys):
    code, doc, _ = run_json(capsys, "sweep", "--max-vertices", "4", "--points", "2")
    assert code == 0 and doc["verdict"]
    assert len(doc["results"]) == 8 * 2 + 10


def test_json_is_byte_deterministic(capsys):
    args = ("hessian-identity", "--r", "4", "--trials", "3", "--seed", "9")
    first = run_json(capsys, *args)[2]
    second = run_json(capsys, *args)[2]
    assert first == second
    doc = json.loads(first)
    assert doc["seed"] == 9 and doc["trials"] == 3


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["kirchhoff"],
    ["kirchhoff", "Q7"],
    ["slp", "K4", "--point", "1,1/0,1,1,1,1"],
    ["slp", "K4", "--point", "1,1"],
    ["slp", "--file", "/nonexistent/graph.txt"],
    ["slp", "K3", "--point", "1,0,1"],
    ["logconcavity", "K4", "--s", "1/2"],
    ["logconcavity", "K4", "--s", "x"],
    ["hessian-identity", "--r", "5", "--mode", "symbolic"],
    ["cayley", "--r", "12"],
    ["identity1", "K4", "--trials", "0"],
])
def test_usage_errors_exit_two(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_malformed_graph_file(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("p 3 2\ne 1 2\n")
    code, _, err = run(capsys, "kirchhoff", "--file", str(path))
    assert code == 2 and "header" in err
    path.write_text("p 3 3\ne 1 2\ne 1 2\ne 2 3\n")
    assert run(capsys, "slp", "--file", str(path))[0] == 2  # not simple
    assert run(capsys, "kirchhoff", "--file", str(path))[0] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kirchhoff", "cayley", "--r", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "16 spanning trees" in proc.stdout
