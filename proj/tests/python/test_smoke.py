import json
import pathlib

import pytest

import hermlie

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def load(name):
    return json.loads((DATA / name).read_text())


def test_describe_two_step_solvable():
    d = hermlie.describe(load("aff_h3.json"))
    assert d["schema"] == hermlie.SCHEMA
    assert d["two_step_solvable"] and not d["unimodular"]
    assert d["derived_dim"] == 2


def test_classify_skt_witness():
    r = hermlie.classify(load("aff_h3.json"), load("aff_h3_tilde.json"))
    assert r["verdicts"] == {"kahler": False, "balanced": False, "skt": True}
    assert r["decomposition"]["pure_type"] == "I"


def test_classify_balanced_witness_type_iii():
    r = hermlie.classify(load("n61.json"), load("n61_hat.json"))
    assert r["verdicts"]["balanced"] and not r["verdicts"]["kahler"]


def test_shear_reconstruction_matches():
    r = hermlie.shear(load("aff_h3_shear.json"))
    assert r["verdicts"]["skt"]
    assert hermlie.salamon(r["algebra"]["salamon"]) == hermlie.salamon("(0,21,0,0,43,0)")


def test_salamon_parameters():
    assert hermlie.salamon("(-24,14,a.34,0,0,0)", {"a": "1/2"}) == "(42,14,1/2.34,0,0,0)"


def test_errors_raise():
    with pytest.raises(hermlie.Error, match="SyntaxError"):
        hermlie.salamon("(0,0,1x)")
    with pytest.raises(hermlie.Error, match="NotAComplexStructure"):
        hermlie.search(load("aff_h3.json"), load("bad_j.json"), "skt")


def test_search_finds_kahler_metric():
    r = hermlie.search(load("r30_squared.json"), load("standard_j6.json"), "kahler", seeds=[0])["result"]
    assert r["status"] == "found" and r["exact_verified"]


def test_catalog_and_examples_criteria():
    assert len(hermlie.catalog()["entries"]) > 0
    assert all(c["passed"] for c in hermlie.verify(only=[1, 2]))
