import io
import json

import pytest

from qlidstone.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_generate_example():
    code, out, _ = run("generate", "--family", "odd1", "--seed", "1,1", "--q", "1/2", "--n", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["family"] == "odd1" and doc["q"] == "1/2"
    assert doc["polys"][1] == {"n": 1, "coeffs": [[1, "1"], [3, "1"]]}


def test_numbers_example():
    code, out, _ = run("numbers", "--kind", "qtangent", "--n", "2", "--q", "1", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,index,value", "0,1,1", "1,3,2"]


def test_verify_example_and_determinism():
    argv = ("verify", "--suite", "all", "--q", "1/2", "--n", "5", "--rng-seed", "7")
    code, out, _ = run(*argv)
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] and doc["reports"]
    assert run(*argv)[1] == out


@pytest.mark.parametrize("method", ["series", "recurrence", "determinant", "production"])
def test_generate_methods_agree(method):
    base = ("generate", "--family", "even2", "--seed", "2,1/3,-1,5,1/2,3", "--q", "2/3", "--n", "3")
    assert run(*base, "--method", method)[1] == run(*base)[1]


def test_json_round_trip():
    _, out, _ = run("conjugate", "--family", "odd2", "--seed", "3,1,2", "--n", "2")
    doc = json.loads(out)
    assert json.loads(json.dumps(doc, indent=2) + "\n") == doc
    assert json.dumps(doc, indent=2) + "\n" == out


def test_latex_and_csv_formats():
    _, out, _ = run("generate", "--family", "odd2", "--seed", "1,0", "--n", "1", "--format", "latex")
    assert r"\frac{1}{8}z^{3}" in out
    _, out, _ = run("generate", "--family", "odd2", "--seed", "1,0", "--n", "1", "--format", "csv")
    assert out.splitlines() == ["n,power,coeff", "0,1,1", "1,3,1/8"]


def test_gf_check_and_examples():
    assert run("gf-check", "--family", "even1", "--seed", "1,2,3,4,5,6,7", "--n", "5")[0] == 0
    code, out, _ = run("examples", "--which", "ex3")
    assert code == 1 and json.loads(out)["passed"] is False


@pytest.mark.parametrize("argv", [
    ("generate", "--family", "odd9", "--seed", "1"),
    ("generate", "--family", "odd1", "--seed", "0,1", "--n", "1"),
    ("generate", "--family", "odd1", "--seed", "1", "--n", "3"),
    ("generate", "--family", "odd1", "--seed", "0.5,x"),
    ("generate", "--family", "odd1", "--seed", "1", "--q", "3/2"),
    ("numbers", "--kind", "catalan"),
    ("verify", "--suite", "nope"),
    ("frobnicate",),
])
def test_usage_errors_exit_2(argv):
    code, out, err = run(*argv)
    assert code == 2 and out == "" and err
