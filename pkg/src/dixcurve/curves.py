"""Supported affine curve models and their rational points.

Two families are supported: the affine line (coordinate ring Q[x]) and
plane elliptic curves in short Weierstrass form y^2 = x^3 + a*x + b
(coordinate ring Q[x,y]/(y^2 - x^3 - a*x - b)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class SingularCurveError(ValueError):
    pass


class PointNotOnCurveError(ValueError):
    pass


@dataclass(frozen=True)
class CurveModel:
    """An affine curve: the line, or a smooth short-Weierstrass cubic."""

    kind: str  # "line" | "elliptic"
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in ("line", "elliptic"):
            raise ValueError("unknown curve kind: %r" % (self.kind,))
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.kind == "elliptic" and self.discriminant() == 0:
            raise SingularCurveError("singular curve")

    @property
    def is_elliptic(self) -> bool:
        return self.kind == "elliptic"

    def discriminant(self) -> Fraction:
        return Fraction(-16) * (4 * self.a ** 3 + 27 * self.b ** 2)

    def rhs(self, x: Fraction) -> Fraction:
        """Value of x^3 + a*x + b."""
        return x ** 3 + self.a * x + self.b

    def rhs_deriv(self, x: Fraction) -> Fraction:
        """Value of 3*x^2 + a."""
        return 3 * x ** 2 + self.a

    def contains(self, x: Fraction, y=None) -> bool:
        if self.kind == "line":
            return y is None
        return y is not None and y * y == self.rhs(x)


def validate(curve: CurveModel) -> None:
    """Raise SingularCurveError unless the model is smooth.

    Construction already enforces smoothness; this is the spec-level entry
    point so callers can validate JSON input explicitly.
    """
    if curve.is_elliptic and curve.discriminant() == 0:
        raise SingularCurveError("singular curve")


@dataclass(frozen=True)
class PointQ:
    """A rational point of a curve model (y is None on the line)."""

    curve: CurveModel
    x: Fraction
    y: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        if self.y is not None:
            object.__setattr__(self, "y", Fraction(self.y))
        if self.curve.kind == "line":
            if self.y is not None:
                raise PointNotOnCurveError("line points have no y")
        else:
            if self.y is None or not self.curve.contains(self.x, self.y):
                raise PointNotOnCurveError(
                    "point (%s, %s) is not on the curve" % (self.x, self.y))

    def is_ramified(self) -> bool:
        """True at elliptic points with y = 0 (x - x_P has valuation 2)."""
        return self.curve.is_elliptic and self.y == 0

    def negate(self) -> "PointQ":
        if self.curve.kind == "line":
            return self
        return PointQ(self.curve, self.x, -self.y)

    def __repr__(self):
        if self.curve.kind == "line":
            return "P(%s)" % (self.x,)
        return "P(%s, %s)" % (self.x, self.y)
