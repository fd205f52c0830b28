import os
import subprocess

import pytest

import flagschur as fs


def test_example_product():
    out = fs.multiply("1,0;1,0", [[1, 1], [0, 0]])
    assert out["n"] == 2 and out["r"] == 2
    terms = {t["matrix"]: t["coeff"] for t in out["terms"]}
    assert terms == {"0,1;1,0": [1], "1,0;0,1": [1]}


def test_element_operands():
    x = {"n": 2, "r": 2, "terms": [{"matrix": "1,0;1,0", "coeff": [0, 1]}]}
    out = fs.multiply(x, "1,1;0,0")
    assert {t["matrix"]: t["coeff"] for t in out["terms"]} == {"0,1;1,0": [0, 1], "1,0;0,1": [0, 1]}


def test_structure_constant():
    assert fs.structure_constant("1,0;1,0", "1,1;0,0", "1,0;0,1") == [1]
    assert fs.structure_constant("1,1;0,0", "0,1;1,0", "1,1;0,0") == [0, 1]


def test_star_and_orbits():
    assert fs.star("1,0;1,0", "1,1;0,0") == [[0, 1], [1, 0]]
    assert fs.star("1,1;0,0", "1,1;0,0") is None
    assert fs.open_orbit([1, 1], [1, 1]) == [[0, 1], [1, 0]]
    assert fs.closed_orbit("(1,1)", "(1,1)") == [[1, 0], [0, 1]]
    assert fs.deg_leq("0,1;1,0", "1,0;0,1")
    assert not fs.deg_leq("1,0;0,1", "0,1;1,0")
    assert fs.nested_idempotent([1, 1, 1], [2, 1]) == [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    assert "digraph" in fs.hasse_dot([1, 1], [1, 1])


def test_decompose():
    assert fs.decompose("0,1;1,0") == [
        {"tok": "E", "i": 1, "d": [0, 2]},
        {"tok": "F", "i": 1, "d": [1, 1]},
    ]


def test_hecke():
    assert fs.hecke_mult("(1 2)", "(2 3)") == [2, 3, 1]
    assert fs.hecke_mult([2, 1], [2, 1]) == [2, 1]
    assert fs.t_sigma([3, 2, 1]) == [3, 2, 1]


def test_verify():
    rep = fs.verify("zero-relations", 2, 2)
    assert rep["passed"] and rep["checks"] > 0 and rep["failures"] == []
    assert fs.verify("hecke", 3)["passed"]


def test_errors():
    with pytest.raises(ValueError):
        fs.star("1,0;1", "1,1;0,0")
    with pytest.raises(ValueError):
        fs.verify("nope", 2)


@pytest.mark.skipif("FLAGSCHUR_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_agrees():
    cli = os.environ["FLAGSCHUR_CLI"]
    res = subprocess.run([cli, "mult", "--algebra", "zero", "1,0;1,0", "1,1;0,0"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.strip() == "0,1;1,0"
