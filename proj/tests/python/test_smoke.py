import json

import pytest

import wgalg


def test_group_orders():
    assert wgalg.group_order("A2") == 6
    assert wgalg.group_order("A2xA1") == 12
    assert wgalg.group_order("I2(5)") == 10


def test_a1_table_and_reduce():
    om = wgalg.Omega("A1")
    assert om.dimension == 3
    assert sorted(om.basis) == ["E{s1}", "E{}", "X{s1}->{}^s1"]
    assert om.reduce("x_s1 * x_s1") == "0"
    assert om.verdict("x_s1") == "nonzero"


def test_beta_identifies_letters():
    om = wgalg.Omega("A2", table=False)
    assert om.reduce("X{s1,s2}->{}^s1 - X{s1,s2}->{}^s2") == "0"


def test_certificates():
    om = wgalg.Omega("A1")
    report = wgalg.verify_certificate(om)
    assert report["overall"] == "PASS"
    a2 = wgalg.Omega("A2")
    cert = wgalg.search_certificate(a2)
    assert cert["elements"]["refl"] == "E{s1} + E{s2}"
    assert wgalg.verify_certificate(a2, cert)["overall"] == "PASS"


def test_errors():
    with pytest.raises(wgalg.ParseError):
        wgalg.Omega("A1").reduce("x_q")
    with pytest.raises(wgalg.WgalgError):
        wgalg.Omega("Q7")


def test_cli_passthrough():
    code, out, _ = wgalg.run(["quiver", "dot", "--coxeter", "A1xA1", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert len(doc["vertices"]) == 4
    assert len(doc["edges"]) == 5
    code, _, _ = wgalg.run(["bogus"])
    assert code == 3
