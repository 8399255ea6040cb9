from fractions import Fraction

import pytest

from dixcurve.groebner import CIdeal, ZeroIdealError
from dixcurve.poly import GPoly, parse_poly


def _ideal(curve, *texts):
    return CIdeal(curve, [parse_poly(t, curve) for t in texts])


def test_zero_ideal_rejected(line):
    with pytest.raises(ZeroIdealError):
        CIdeal(line, [])


def test_membership_line(line):
    f = _ideal(line, "x^2", "x*xi")
    assert f.member(parse_poly("x^2*xi", line))
    assert not f.member(parse_poly("x", line))


def test_membership_uses_curve_relation(ec):
    # y^2 - 1 = x^3 lies in (x) because of the relation
    f = _ideal(ec, "x")
    assert f.member(parse_poly("y^2 - 1", ec))


def test_colength(line, ec):
    assert _ideal(line, "x^2", "xi").colength() == 2
    assert _ideal(line, "x").colength() is None  # xi never bounded
    assert _ideal(ec, "x", "y - 1", "xi").colength() == 1


def test_sum_product_intersection_colon(line):
    a = _ideal(line, "x")
    b = _ideal(line, "x - 1")
    assert a.product(b) == _ideal(line, "x^2 - x")
    assert a.intersection(b) == _ideal(line, "x^2 - x")
    assert a.sum(b).is_whole_ring()
    assert _ideal(line, "x^2 - x").colon(b) == a


def test_divisorial_hull_strips_codim_two(line):
    # (x^2, x*xi) has hull (x); the embedded point at the origin vanishes
    f = _ideal(line, "x^2", "x*xi")
    assert f.divisorial_hull() == _ideal(line, "x")


def test_hull_of_invertible_ideal_is_itself(ec):
    f = _ideal(ec, "x", "y - 1")
    assert f.divisorial_hull() == f


def test_intersect_ring_and_fatness(line):
    f = _ideal(line, "x^2", "x*xi")
    gens = f.intersect_ring()
    assert gens is not None and all(g.is_ring_element() for g in gens)
    assert f.is_fat()
    assert not _ideal(line, "xi").is_fat()


def test_equality_is_ideal_equality(ec):
    a = _ideal(ec, "x", "y - 1")
    b = _ideal(ec, "y - 1", "x + y - 1")
    assert a == b
    assert hash(a) == hash(b)
