import random
from fractions import Fraction

from dixcurve.classify import extract_I
from dixcurve.curves import PointQ
from dixcurve.divisors import class_of_divisor, divisor_of_ideal, OIdeal
from dixcurve.dop import format_dop, parse_dop
from dixcurve.jets import jet
from dixcurve.poly import parse_poly
from dixcurve.rightgb import RightIdealD
from dixcurve.subspaces import (PDSubspace, PrimaryData, I_V_formula, codim,
                                div_of, ideal_to_subspace, scale_subspace,
                                subspace_to_ideal)
from dixcurve.verify import random_subspace


def _v1(line):
    """V = {f : f'(0) = 0}."""
    p = PointQ(line, Fraction(0))
    return PDSubspace(line, [PrimaryData(p, 2, [[0, 1]])])


def test_weyl_golden_subspace(line):
    v = _v1(line)
    m = subspace_to_ideal(v)
    assert m == RightIdealD(line, [parse_dop("x^2", line),
                                   parse_dop("x*d - 1", line)])
    assert ideal_to_subspace(m) == v


def test_theorem_5_2_formula(line):
    v = _v1(line)
    iv = I_V_formula(v)
    assert iv == OIdeal(line, [parse_poly("x", line, False)])
    assert iv == extract_I(subspace_to_ideal(v).gr_ideal())


def test_lemma_5_3(line, ec):
    rng = random.Random("lemma-5.3-test")
    for curve in (line, ec):
        for _ in range(4):
            v = random_subspace(curve, rng)
            assert codim(v) == I_V_formula(v).colength()


def test_round_trips_elliptic(ec):
    rng = random.Random("ch-round-trip-test")
    for _ in range(3):
        v = random_subspace(ec, rng, max_codim=3)
        assert ideal_to_subspace(subspace_to_ideal(v)) == v


def test_monotonicity(line):
    p = PointQ(line, Fraction(0))
    small = PDSubspace(line, [PrimaryData(p, 2, [[0, 1], [1, 0]])])
    big = PDSubspace(line, [PrimaryData(p, 2, [[0, 1]])])
    m_small, m_big = subspace_to_ideal(small), subspace_to_ideal(big)
    assert m_big.contains(m_small)


def test_scaling_covariance(ec):
    from dixcurve.divisors import pic_eq, pic_sub
    rng = random.Random("scaling-test")
    for _ in range(3):
        v = random_subspace(ec, rng, max_codim=2)
        f = parse_poly(rng.choice(["x", "y - 1", "x + 1"]), ec, False)
        fv = scale_subspace(v, f)
        lhs = class_of_divisor(div_of(fv))
        rhs = pic_sub(class_of_divisor(div_of(v)),
                      class_of_divisor(divisor_of_ideal(OIdeal(ec, [f]))))
        assert pic_eq(lhs, rhs)


def test_membership_matches_conditions(line):
    v = _v1(line)
    assert v.contains(parse_poly("x^2", line, False))
    assert v.contains(parse_poly("1", line, False))
    assert not v.contains(parse_poly("x", line, False))
