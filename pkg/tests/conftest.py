from fractions import Fraction

import pytest

from dixcurve.curves import CurveModel, PointQ


@pytest.fixture
def line():
    return CurveModel("line")


@pytest.fixture
def ec():
    """The battery curve y^2 = x^3 + 1."""
    return CurveModel("elliptic", Fraction(0), Fraction(1))


@pytest.fixture
def pt_p(ec):
    return PointQ(ec, Fraction(0), Fraction(1))


@pytest.fixture
def pt_q(ec):
    return PointQ(ec, Fraction(2), Fraction(3))
