from fractions import Fraction

from dixcurve.dop import parse_dop
from dixcurve.groebner import CIdeal
from dixcurve.poly import parse_poly
from dixcurve.rightgb import RightIdealD
from dixcurve.verify import (verify_appA, verify_battery, verify_comm,
                             verify_ginzburg, verify_T3)


def _m1(line):
    return RightIdealD(line, [parse_dop("x^2", line),
                              parse_dop("x*d - 1", line)])


def test_verify_comm_examples(line, ec):
    assert verify_comm(RightIdealD.whole_ring(line)).passed
    assert verify_comm(_m1(line)).passed
    mp = RightIdealD(ec, [parse_dop("x", ec), parse_dop("y - 1", ec)])
    assert verify_comm(mp).passed


def test_verify_T3_examples(line, ec):
    assert verify_T3(RightIdealD.whole_ring(line)).passed
    assert verify_T3(_m1(line)).passed
    mp = RightIdealD(ec, [parse_dop("x", ec), parse_dop("y - 1", ec)])
    assert verify_T3(mp).passed


def test_verify_ginzburg_examples(line, ec):
    assert verify_ginzburg(_m1(line), (0, 0), (0, 1)).passed
    assert verify_ginzburg(_m1(line), (1, 2), (1, 2)).passed
    mp = RightIdealD(ec, [parse_dop("x", ec), parse_dop("y - 1", ec)])
    assert verify_ginzburg(mp, (0, 0), (2, 1)).passed


def test_verify_appA_examples(line, ec):
    assert verify_appA(CIdeal(line, [parse_poly("x^2", line),
                                     parse_poly("x*xi", line)])).passed
    assert verify_appA(CIdeal(ec, [parse_poly("x", ec),
                                   parse_poly("y - 1", ec)])).passed


def test_battery_empty(line):
    assert verify_battery(line, count=0) == []


def test_battery_deterministic(line):
    a = verify_battery(line, seed=7, count=2)
    b = verify_battery(line, seed=7, count=2)
    assert a == b
    assert all(r.passed for r in a)


def test_battery_report_schema(line):
    reports = verify_battery(line, count=1)
    assert len(reports) == 12
    r = reports[0].to_json()
    assert set(r) == {"theorem", "instance", "lhs", "rhs", "pass"}
