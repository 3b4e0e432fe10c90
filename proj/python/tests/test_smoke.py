import os
import pathlib

import pytest

import incalg

DATA = pathlib.Path(os.environ.get("INCALG_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


def test_ring_arithmetic():
    z12 = incalg.Ring("Z/12")
    assert z12.order == 12
    assert z12.central_units() == ["1", "5", "7", "11"]
    assert z12.mul("5", "5") == "1"
    assert z12.inverse("7") == "7"
    with pytest.raises(incalg.NonUnitError):
        z12.inverse("4")
    with pytest.raises(ValueError):
        incalg.Ring("Z/1")


def test_preorder_quotient():
    p = incalg.Preorder(["p", "q", "r"], [("p", "q"), ("q", "p"), ("p", "r")])
    assert p.classes() == [["p", "q"], ["r"]]
    assert p.interval("p", "q") == ["p", "q"]
    assert not p.is_partial_order()
    crown = incalg.Preorder.crown()
    assert crown.quotient() == crown
    assert crown.cyclomatic_number() == 1


def test_convolution_and_inverse():
    a = incalg.Algebra(incalg.Preorder.chain(3), incalg.Ring("Z/5"))
    zeta = a.zeta()
    assert (zeta * zeta)[("a", "c")] == "3"
    mu = zeta.invert()
    assert zeta * mu == a.delta()
    assert mu[("a", "b")] == "4"
    with pytest.raises(incalg.SupportError):
        a.function({("c", "a"): "1"})
    d, v = zeta.unit_decompose()
    assert (a.delta() + d) * v == zeta


def test_non_inner_crown_system():
    crown = incalg.Preorder.read(str(DATA / "crown.txt"))
    ws = incalg.WeightSystem.from_json(crown, (DATA / "crown_noninner_z5.json").read_text())
    assert ws.is_valid()
    assert not ws.is_inner()
    assert ws.find_potential() is None
    assert ws.witness() == ("b-d-a-c-b", "2")
    w1, w0, potential = ws.decompose()
    assert w1.weights()[("b", "d")] == "2"
    assert w0.find_potential() == potential
    assert w1.compose(w0) == ws


def test_inner_round_trip():
    crown = incalg.Preorder.crown()
    z5 = incalg.Ring("Z/5")
    ws = incalg.WeightSystem.from_potential(crown, z5, {"a": "1", "b": "2", "c": "2", "d": "1"})
    assert ws.is_inner()
    assert ws.find_potential() == {"a": "1", "b": "2", "c": "2", "d": "1"}
    a = incalg.Algebra(crown, z5)
    f = a.function({("a", "c"): "1", ("b", "d"): "3"})
    assert ws.apply(f) == incalg.hadamard(ws.mult_function(), f)


def test_enumeration_counts():
    z5 = incalg.Ring("Z/5")
    assert len(incalg.enumerate_mult(incalg.Preorder.crown(), z5)) == 256
    assert len(incalg.enumerate_inner(incalg.Preorder.crown(), z5)) == 64
    assert len(incalg.enumerate_inner(incalg.Preorder.diamond(), z5)) == 64
    with pytest.raises(incalg.GuardExceeded):
        incalg.enumerate_mult(incalg.Preorder.chain(5), z5, max_candidates=10)


def test_verify_structure_report():
    report = incalg.verify_structure(incalg.Preorder.chain(3), incalg.Ring("Z/12"))
    assert report["passed"]
    assert report["counts"]["mult"] == 16


def test_cli_entry_point():
    code, out, err = incalg.run(["info", "--poset", str(DATA / "crown.txt")])
    assert code == 0, err
    assert "lambda=1" in out
    code, out, _ = incalg.run(["is-inner", "--poset", str(DATA / "crown.txt"), "--ring", "Z/5",
                               "--weights", str(DATA / "crown_noninner_z5.json")])
    assert code == 1
    assert "weight 2" in out
