import random
from fractions import Fraction

import pytest

from dixcurve.classify import n_invariant
from dixcurve.curves import PointQ
from dixcurve.divisors import (DivisorClass, OIdeal, maximal_ideal,
                               pic_identity)
from dixcurve.dop import parse_dop
from dixcurve.groebner import CIdeal
from dixcurve.picd import (BimoduleDatum, CurveAut, DAut,
                           NotAnAutomorphismError, act_dideal, act_graded,
                           act_pic, pic_preimage, sd_mul)
from dixcurve.poly import GPoly, parse_poly
from dixcurve.rightgb import RightIdealD
from dixcurve.verify import (random_datum, random_daut, random_fat_ideal,
                             sample_classes)


def _mp(curve, x, y=None):
    coords = (Fraction(x),) if y is None else (Fraction(x), Fraction(y))
    return maximal_ideal(PointQ(curve, *coords))


def test_unsupported_automorphisms_rejected(line, ec):
    with pytest.raises(NotAnAutomorphismError):
        CurveAut(line, alpha=Fraction(0))
    with pytest.raises(NotAnAutomorphismError):
        CurveAut(ec, alpha=Fraction(2))
    with pytest.raises(NotAnAutomorphismError):
        # d must map to u*d + w with u = sigma's xi factor
        DAut(CurveAut.identity(line), Fraction(2), GPoly.zero(line))


def test_act_graded_examples(ec):
    p = _mp(ec, 0, 1)
    q = _mp(ec, 2, 3)
    f = p.extend()
    neutral = BimoduleDatum.neutral(ec)
    assert act_graded(neutral, f) == f
    assert act_graded(BimoduleDatum(q, CurveAut.identity(ec)), f) \
        == p.product(q).extend()
    # inversion carries m_P to m_{(0,-1)}
    nu = BimoduleDatum(OIdeal.whole_ring(ec), CurveAut.inversion(ec))
    assert act_graded(nu, f) == _mp(ec, 0, -1).extend()


def test_act_dideal_examples(line, ec):
    m1 = RightIdealD(line, [parse_dop("x^2", line),
                            parse_dop("x*d - 1", line)])
    ident = DAut.identity(line)
    assert act_dideal(ident, OIdeal.whole_ring(line), m1) == m1

    mp = RightIdealD(ec, [parse_dop("x", ec), parse_dop("y - 1", ec)])
    assert act_dideal(DAut.identity(ec), _mp(ec, 2, 3), mp) \
        == RightIdealD(ec, [parse_dop(s, ec) for s in
                            ("x*(x - 2)", "x*(y - 3)",
                             "(y - 1)*(x - 2)", "(y - 1)*(y - 3)")])

    # the twist d -> d + x sends M1 to the ideal generated by
    # {x^2, x*d - x^2 - 1}, which still has n = 1
    phi = DAut.from_sigma(CurveAut.identity(line), GPoly.var_x(line))
    twisted = act_dideal(phi, OIdeal.whole_ring(line), m1)
    expected = RightIdealD(line, [parse_dop("x^2", line),
                                  parse_dop("x*d - x^2 - 1", line)])
    assert twisted == expected
    assert n_invariant(twisted) == 1


def test_action_law(line, ec):
    rng = random.Random("picd-action-law-test")
    for curve in (line, ec):
        for _ in range(4):
            p, q = random_datum(curve, rng), random_datum(curve, rng)
            c = rng.choice(sample_classes(curve))
            assert act_pic(sd_mul(p, q), c) == act_pic(q, act_pic(p, c))


def test_equivariance(ec):
    rng = random.Random("picd-equivariance-test")
    for _ in range(2):
        m = random_fat_ideal(ec, rng)
        p = random_datum(ec, rng)
        phi = random_daut(ec, rng)
        assert act_dideal(phi, p.ideal, m).gr_ideal() \
            == act_graded(BimoduleDatum(p.ideal, phi.sigma), m.gr_ideal())


def test_pic_preimage_witnesses(ec, line):
    for curve in (line, ec):
        for c in sample_classes(curve):
            datum = pic_preimage(c)
            assert datum.sigma.is_identity()
            assert act_pic(datum, pic_identity(curve)) == c
    # the spec's named witnesses
    c = DivisorClass(ec, PointQ(ec, Fraction(0), Fraction(-1)))  # class -[P]
    assert pic_preimage(c).ideal == _mp(ec, 0, 1)
    two_torsion = DivisorClass(ec, PointQ(ec, Fraction(-1), Fraction(0)))
    assert pic_preimage(two_torsion).ideal == _mp(ec, -1, 0)
