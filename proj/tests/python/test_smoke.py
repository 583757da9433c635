import json
import os
import pathlib

import pytest

import skewnorm

ROOT = pathlib.Path(os.environ.get("SKEWNORM_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))
WEYL = {"ring": "Qx", "vars": [{"name": "t", "aut": {"kind": "identity"}, "der": {"kind": "ddx"}}]}


@pytest.fixture
def weyl():
    return skewnorm.Ring.from_json(json.dumps(WEYL))


def test_weyl_commutator(weyl):
    t, x = weyl.parse("t"), weyl.parse("x")
    assert str(t * x - x * t) == "1"
    assert str(t**2 * x) == "x*t^2 + 2*t"
    assert weyl.variables == ["t"]


def test_round_trip(weyl):
    f = skewnorm.Poly(weyl, "(t + x)^3 - 1/2*t")
    assert skewnorm.Poly(weyl, str(f)) == f


def test_errors_are_value_errors(weyl):
    with pytest.raises(skewnorm.Error):
        weyl.parse("t +")
    with pytest.raises(ValueError):
        weyl.parse("s")


def test_evaluate(weyl):
    f = weyl.parse("t^2")
    assert str(skewnorm.evaluate(f, [weyl.parse("t + 1")])) == "t^2 + 2*t + 1"


def test_monicize_and_normalize():
    ring = skewnorm.Ring.from_file(str(ROOT / "configs" / "weyl2.json"))
    r = skewnorm.monicize(ring.parse("t1*t2"))
    assert r["shifts"] == ["1"]
    assert str(r["g"]) == "t1*t2 + t2^2"
    report = skewnorm.normalize(ring, [ring.parse("t1*t2")])
    assert len(report["steps"]) == 1
    assert skewnorm.replay_report(json.dumps(report))


def test_cns_and_roots():
    ring = skewnorm.Ring.from_file(str(ROOT / "configs" / "quaternion.json"))
    f = ring.parse("t^2 + 1")
    w = skewnorm.cns_witness(f, [["i", "0", "1"]])
    assert w["point"] == ["0"] and w["value"] == "1"
    assert len(skewnorm.gm_check(f, ["i", "j", "k"])["classes"]) == 1


def test_reduce():
    ring = skewnorm.Ring.from_file(str(ROOT / "configs" / "weyl2.json"))
    q, r = skewnorm.reduce(ring.parse("t2^3"), ring.parse("t2^2 + t1*t2"))
    assert str(r) == "t1^2*t2"
    assert q * ring.parse("t2^2 + t1*t2") + r == ring.parse("t2^3")


def test_cli():
    code, out, _ = skewnorm.run_cli(["--ring", str(ROOT / "configs" / "weyl.json"), "normalform", "t*x"])
    assert code == 0 and out == "x*t + 1\n"
    code, _, err = skewnorm.run_cli(["--ring", str(ROOT / "configs" / "weyl.json"), "normalform", "t*"])
    assert code == 2 and err.startswith("error:")
