from fractions import Fraction

import pytest

from dixcurve.curves import (CurveModel, PointNotOnCurveError, PointQ,
                             SingularCurveError, validate)
from dixcurve.jets import jet
from dixcurve.poly import GPoly, format_poly, parse_poly


def test_validate_smooth_and_singular(line, ec):
    validate(line)
    validate(ec)
    with pytest.raises(SingularCurveError):
        CurveModel("elliptic", Fraction(0), Fraction(0))


def test_points_must_lie_on_curve(ec, line):
    with pytest.raises(PointNotOnCurveError):
        PointQ(ec, Fraction(1), Fraction(1))
    with pytest.raises(PointNotOnCurveError):
        PointQ(line, Fraction(0), Fraction(0))


def test_curve_relation_reduces(ec):
    # y^2 collapses to x^3 + 1 in canonical form
    y = GPoly.var_y(ec)
    x = GPoly.var_x(ec)
    assert y * y == x ** 3 + GPoly.one(ec)


def test_parse_format_round_trip(line, ec):
    for curve, text in ((line, "x^2 - 3/2*x + 1"),
                        (ec, "y^2 - x"),
                        (ec, "xi^2*x + y")):
        p = parse_poly(text, curve)
        assert parse_poly(format_poly(p), curve) == p


def test_jet_line(line):
    f = parse_poly("x^2", line, allow_xi=False)
    assert jet(f, PointQ(line, Fraction(0)), 2) == [0, 0, 1]


def test_jet_elliptic_unramified(ec, pt_p):
    # power series of y at (0,1) on y^2 = x^3 + 1
    y = GPoly.var_y(ec)
    assert jet(y, pt_p, 3) == [1, 0, 0, Fraction(1, 2)]


def test_jet_elliptic_ramified(ec):
    # x + 1 has valuation 2 at (-1, 0); local parameter is y
    r = PointQ(ec, Fraction(-1), Fraction(0))
    x = GPoly.var_x(ec)
    assert jet(x, r, 1) == [-1, 0]


def test_jet_is_multiplicative(ec, pt_p, pt_q):
    from dixcurve.jets import series_mul
    f = parse_poly("x^2 + y", ec, allow_xi=False)
    g = parse_poly("x - 2*y + 1", ec, allow_xi=False)
    for p in (pt_p, pt_q):
        jf, jg = jet(f, p, 4), jet(g, p, 4)
        assert jet(f * g, p, 4) == series_mul(jf, jg, 5)


def test_delta_leibniz_and_kills_relation(line, ec):
    assert parse_poly("x^2", line, allow_xi=False).delta() \
        == parse_poly("2*x", line, allow_xi=False)
    x, y = GPoly.var_x(ec), GPoly.var_y(ec)
    assert x.delta() == y.scale(Fraction(2))
    assert y.delta() == x * x * GPoly.const(ec, Fraction(3))
    f = parse_poly("x*y + x^2", ec, allow_xi=False)
    g = parse_poly("y - x", ec, allow_xi=False)
    assert (f * g).delta() == f.delta() * g + f * g.delta()
