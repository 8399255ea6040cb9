import json
from fractions import Fraction

import pytest

from dixcurve import cli, jsonio
from dixcurve.curves import CurveModel, PointQ
from dixcurve.divisors import DivisorClass
from dixcurve.picd import BimoduleDatum, CurveAut, DAut
from dixcurve.poly import GPoly


def test_curve_round_trip(line, ec):
    for curve in (line, ec):
        assert jsonio.curve_from_json(jsonio.curve_to_json(curve)) == curve


def test_point_and_class_round_trip(ec, line):
    p = PointQ(ec, Fraction(0), Fraction(1))
    assert jsonio.point_from_json(ec, jsonio.point_to_json(p)) == p
    for c in (DivisorClass(ec, p), DivisorClass(ec, None)):
        assert jsonio.class_from_json(ec, jsonio.class_to_json(c)) == c
    q = PointQ(line, Fraction(-3, 2))
    assert jsonio.point_from_json(line, jsonio.point_to_json(q)) == q


def test_ideal_round_trips(line, ec):
    m = jsonio.dideal_from_json(line, ["x^2", "x*d - 1"])
    assert jsonio.dideal_from_json(line, jsonio.dideal_to_json(m)) == m
    f = jsonio.cideal_from_json(ec, ["x^2", "xi*x"])
    assert jsonio.cideal_from_json(ec, jsonio.cideal_to_json(f)) == f
    i = jsonio.oideal_from_json(ec, ["x", "y - 1"])
    assert jsonio.oideal_from_json(ec, jsonio.oideal_to_json(i)) == i


def test_subspace_round_trip(line):
    obj = {"points": [{"point": ["0"], "jet_order": 2,
                       "conditions": [["0", "1"]]}]}
    v = jsonio.subspace_from_json(line, obj)
    assert jsonio.subspace_to_json(v) == obj


def test_datum_and_daut_round_trip(ec, line):
    datum = BimoduleDatum(jsonio.oideal_from_json(ec, ["x", "y - 1"]),
                          CurveAut.inversion(ec))
    assert jsonio.datum_from_json(
        ec, jsonio.datum_to_json(datum)) == datum
    phi = DAut.from_sigma(CurveAut(line, Fraction(2), Fraction(1)),
                          GPoly.var_x(line))
    back = jsonio.daut_from_json(line, jsonio.daut_to_json(phi))
    assert back == phi


def test_bad_json_is_a_clean_error(line):
    with pytest.raises(jsonio.JsonFormatError):
        jsonio.curve_from_json({"model": "mystery"})
    with pytest.raises(jsonio.JsonFormatError):
        jsonio.point_from_json(line, ["0", "1", "2"])
    with pytest.raises(jsonio.JsonFormatError):
        jsonio.subspace_from_json(line, {"nope": 1})


def _run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_cli_golden_pipeline(capsys):
    code, out = _run(capsys, "gamma", "--in", '["x^2", "x*d - 1"]')
    assert code == 0 and json.loads(out) == {"class": "identity"}

    code, out = _run(capsys, "n", "--in", '["x^2", "x*d - 1"]')
    assert code == 0 and json.loads(out) == {"n": 1}

    code, out = _run(capsys, "gr", "--in", '["x^2", "x*d - 1"]')
    assert code == 0 and set(json.loads(out)["gr"]) == {"x^2", "xi*x"}

    code, out = _run(capsys, "hilb", "--in", '["x^2", "xi*x"]')
    assert code == 0
    parsed = json.loads(out)
    assert parsed["n"] == 1 and set(parsed["I"]) == {"x", "xi"}


def test_cli_elliptic_gamma(capsys):
    code, out = _run(capsys, "gamma", "--curve",
                     '{"model":"elliptic","a":"0","b":"1"}',
                     "--in", '["x", "y - 1"]')
    assert code == 0 and json.loads(out) == {"class": ["0", "-1"]}


def test_cli_subspace_commands(capsys):
    sub = json.dumps({"points": [{"point": ["0"], "jet_order": 2,
                                  "conditions": [["0", "1"]]}]})
    code, out = _run(capsys, "to-ideal", "--in", sub)
    assert code == 0
    assert set(json.loads(out)["ideal"]) == {"x^2", "x*d - 1"}

    code, out = _run(capsys, "to-subspace", "--in", '["x^2", "x*d - 1"]')
    assert code == 0 and json.loads(out) == json.loads(sub)

    code, out = _run(capsys, "div", "--in", sub)
    assert code == 0
    assert json.loads(out) == {"div": [{"point": ["0"], "mult": -1}],
                               "class": "identity"}


def test_cli_act(capsys):
    payload = json.dumps({
        "datum": {"ideal": ["x", "y - 1"], "sigma": "id"},
        "on": {"class": "identity"}})
    code, out = _run(capsys, "act", "--curve",
                     '{"model":"elliptic","a":"0","b":"1"}', "--in", payload)
    assert code == 0 and json.loads(out) == {"class": ["0", "-1"]}


def test_cli_validate_rejects_singular(capsys):
    code, _ = _run(capsys, "validate", "--curve",
                   '{"model":"elliptic","a":"0","b":"0"}')
    assert code == 121


def test_cli_verify_exit_code_counts_failures(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, _ = _run(capsys, "verify", "all", "--count", "1",
                   "--out", str(out_path))
    parsed = json.loads(out_path.read_text())
    assert code == parsed["failed"] == 0
    assert len(parsed["reports"]) == 12
    assert all(r["pass"] for r in parsed["reports"])
    assert set(parsed["reports"][0]) == {"theorem", "instance",
                                         "lhs", "rhs", "pass"}
