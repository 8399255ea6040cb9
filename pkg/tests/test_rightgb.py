from fractions import Fraction

from dixcurve.dop import DOp, format_dop, parse_dop
from dixcurve.groebner import CIdeal
from dixcurve.poly import parse_poly
from dixcurve.rightgb import RightIdealD


def _m1(line):
    return RightIdealD(line, [parse_dop("x^2", line),
                              parse_dop("x*d - 1", line)])


def test_weyl_golden_rgb(line):
    basis = {format_dop(g) for g in _m1(line).rgb_ops()}
    assert basis == {"x^2", "x*d - 1"}


def test_weyl_golden_gr(line):
    gr = _m1(line).gr_ideal()
    assert gr == CIdeal(line, [parse_poly("x^2", line),
                               parse_poly("x*xi", line)])


def test_membership(line):
    m = _m1(line)
    # x^2*d = x^2 * d and x = ... is NOT in M1 (f(0) can be anything,
    # but operators in M1 map O into {f : f'(0) = 0})
    assert m.member(parse_dop("x^2*d", line))
    assert m.member(parse_dop("x^3", line))
    assert not m.member(parse_dop("x", line))
    assert not m.member(parse_dop("d", line))


def test_elliptic_point_ideal(ec):
    m = RightIdealD(ec, [parse_dop("x", ec), parse_dop("y - 1", ec)])
    basis = {format_dop(g) for g in m.rgb_ops()}
    assert basis == {"x", "y - 1"}
    gr = m.gr_ideal()
    assert gr == CIdeal(ec, [parse_poly("x", ec), parse_poly("y - 1", ec)])


def test_intersect_O(line):
    cap = _m1(line).intersect_O()
    assert cap is not None
    # M1 meets O(X) in (x^2)
    assert cap.extend() == CIdeal(line, [parse_poly("x^2", line)])


def test_equality_independent_of_generators(line):
    a = _m1(line)
    b = RightIdealD(line, [parse_dop("x^2", line),
                           parse_dop("x*d - 1", line),
                           parse_dop("x^2*d^3 + x*d - 1", line)])
    assert a == b
    assert hash(a) == hash(b)


def test_whole_ring_detection(line):
    assert RightIdealD(line, [parse_dop("1", line)]).is_whole_ring()
    assert not _m1(line).is_whole_ring()
