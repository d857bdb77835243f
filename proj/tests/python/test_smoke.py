import os

import pytest

import _fixcheck as fx

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "data")


def data(name):
    return os.path.join(DATA, name)


def test_check_model_least_confirmed():
    r = fx.check_model(data("term_chain.fix"), "term", "mu", mode="least")
    assert r["is_fixpoint"]
    assert r["verdict"] == "confirmed"
    assert r["witness"] == []
    assert r["suggested_delta"] is None


def test_check_model_least_refuted():
    r = fx.check_model(data("term_chain.fix"), "term", "allones")
    assert r["is_fixpoint"]
    assert r["verdict"] == "refuted"
    assert set(r["witness"]) == {"y", "z"}
    assert r["suggested_delta"] == "1"
    assert r["corrected"]["y"] == "0"
    assert r["corrected"]["z"] == "0"
    assert r["corrected"]["x"] == "1"


def test_eval_and_iterate():
    v = fx.eval_model(data("term_chain.fix"), "term", "mu")
    assert v["x"] == "1/2" and v["u"] == "1" and v["y"] == "0"
    it = fx.iterate_model(data("term_chain.fix"), "term", "allones")
    assert it["reached_least"]
    assert it["result"] == {"x": "1/2", "y": "0", "z": "0", "u": "1"}


def test_termination_frontend():
    r = fx.check_termination(data("term_chain.mc"), "mu")
    assert r["verdict"] == "confirmed"
    r = fx.check_termination(data("term_chain.mc"), "ones")
    assert r["verdict"] == "refuted" and set(r["witness"]) == {"y", "z"}


def test_metric_lmc():
    r = fx.check_metric(data("four_state.lmc"), "d8", mode="least")
    assert r["is_fixpoint"]
    assert r["verdict"] == "refuted"
    assert r["witness"] == ["(4,4)"]
    g = fx.check_metric(data("four_state.lmc"), "d8", mode="greatest")
    assert g["verdict"] == "refuted" and g["witness"] == ["(3,3)"]


def test_metric_nts():
    r = fx.check_metric(data("two_state.nts"), "dhalf")
    assert r["is_fixpoint"] and r["verdict"] == "refuted"
    assert set(r["witness"]) == {"(x,y)", "(y,x)"}
    with pytest.raises(fx.FixcheckError):
        fx.check_metric(data("two_state.nts"), "dhalf", mode="greatest")


def test_wasserstein_and_vertices():
    d = {("a", "b"): "1", ("b", "a"): "1"}
    w = fx.wasserstein(d, {"a": "1/2", "b": "1/2"}, {"a": "1"})
    assert w == "1/2"
    vs = fx.transport_vertices({"a": "1"}, {"b": "1"})
    assert vs == [{("a", "b"): "1"}]


def test_hausdorff():
    d = {("x", "z"): "1", ("z", "x"): "1", ("y", "z"): "3/4", ("z", "y"): "3/4"}
    assert fx.hausdorff(d, {"y"}, {"z"}) == "3/4"
    assert fx.hausdorff(d, {"x", "y"}, {"z"}) == "1"
    assert fx.hausdorff(d, set(), set()) == "0"
    assert fx.hausdorff(d, {"x"}, set()) == "1"


def test_roundtrip_and_errors():
    text = fx.model_roundtrip(data("term_chain.fix"))
    assert "algebra real 1" in text
    with pytest.raises(fx.FixcheckError):
        fx.check_model(data("term_chain.fix"), "nosuch", "mu")
    with pytest.raises(fx.FixcheckError):
        fx.check_model(data("term_chain.fix"), "term", "nosuch")
