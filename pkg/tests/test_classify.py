from fractions import Fraction

from dixcurve.classify import (extract_I, gamma, gamma_bar, hilb_point,
                               n_invariant, n_of_graded)
from dixcurve.curves import PointQ
from dixcurve.divisors import DivisorClass, OIdeal, maximal_ideal
from dixcurve.dop import parse_dop
from dixcurve.groebner import CIdeal
from dixcurve.poly import parse_poly
from dixcurve.rightgb import RightIdealD


def _cideal(curve, *texts):
    return CIdeal(curve, [parse_poly(t, curve) for t in texts])


def test_extract_I_weyl(line):
    ideal = extract_I(_cideal(line, "x^2", "x*xi"))
    assert ideal.extend() == _cideal(line, "x")


def test_extract_I_of_extended_ideal(ec):
    base = maximal_ideal(PointQ(ec, Fraction(0), Fraction(1)))
    assert extract_I(base.extend()) == base


def test_hilb_point_examples(line):
    assert hilb_point(_cideal(line, "x^2", "x*xi")) == _cideal(line, "x", "xi")
    assert hilb_point(_cideal(line, "x^3", "x^2*xi", "x*xi^2")) \
        == _cideal(line, "x^2", "x*xi", "xi^2")


def test_n_of_graded(line, ec):
    assert n_of_graded(_cideal(line, "x^2", "x*xi")) == 1
    assert n_of_graded(_cideal(line, "x^3", "x^2*xi", "x*xi^2")) == 3
    # extended ideals of O(X) have n = 0
    p = maximal_ideal(PointQ(ec, Fraction(2), Fraction(3)))
    assert n_of_graded(p.extend()) == 0


def test_weyl_golden_invariants(line):
    m1 = RightIdealD(line, [parse_dop("x^2", line),
                            parse_dop("x*d - 1", line)])
    assert n_invariant(m1) == 1
    assert gamma(m1).is_identity()


def test_elliptic_gamma(ec):
    p = PointQ(ec, Fraction(0), Fraction(1))
    m = RightIdealD(ec, [parse_dop("x", ec), parse_dop("y - 1", ec)])
    # class of m_P pairs with -[P], which reduces to the negated point
    assert gamma(m) == DivisorClass(ec, p.negate())


def test_gamma_bar_ignores_codim_two(line, ec):
    for curve, texts in ((line, ("x^2", "x*xi")),
                         (ec, ("x^2", "x*xi", "xi^2"))):
        f = CIdeal(curve, [parse_poly(t, curve) for t in texts])
        assert gamma_bar(f) == gamma_bar(f.divisorial_hull())
