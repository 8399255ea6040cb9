"""Ideals of O(X), divisors, and divisor-class (Pic X) arithmetic.

On the affine elliptic curve, Pic X is identified with the group of
rational points of the projective model under the chord-tangent law (the
class of the point at infinity is trivial in the affine picture); the
canonical representative of a class is a single point or the identity.
The sign convention pairs an ideal I with the divisor -sum v_P(I) [P].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .curves import CurveModel, PointQ
from .groebner import CIdeal
from .jets import valuation_of_elem
from .poly import GPoly, to_univar, uv_gcd, rational_roots


class NonRationalSupportError(ValueError):
    pass


def sqrt_fraction(q: Fraction):
    """Exact rational square root, or None."""
    if q < 0:
        return None
    ns = math.isqrt(q.numerator)
    ds = math.isqrt(q.denominator)
    if ns * ns == q.numerator and ds * ds == q.denominator:
        return Fraction(ns, ds)
    return None


# ---- elliptic chord-tangent group law ---------------------------------

def ec_add(curve: CurveModel, p, q):
    """Group law on rational points; None is the identity."""
    if p is None:
        return q
    if q is None:
        return p
    if p.x == q.x and p.y == -q.y:
        return None
    if p == q:
        m = curve.rhs_deriv(p.x) / (2 * p.y)
    else:
        if p.x == q.x:
            return None
        m = (q.y - p.y) / (q.x - p.x)
    x3 = m * m - p.x - q.x
    y3 = m * (x3 - p.x) + p.y
    return PointQ(curve, x3, -y3)


def ec_neg(p):
    return None if p is None else p.negate()


def ec_mul(curve, p, n: int):
    if n < 0:
        return ec_mul(curve, ec_neg(p), -n)
    out = None
    for _ in range(n):
        out = ec_add(curve, out, p)
    return out


# ---- divisor classes ---------------------------------------------------

@dataclass(frozen=True)
class DivisorClass:
    """Reduced Pic X element: identity, or a single elliptic point."""

    curve: CurveModel
    point: PointQ | None = None

    def __post_init__(self):
        if self.point is not None and self.curve.kind == "line":
            raise ValueError("Pic of the line is trivial")

    def is_identity(self):
        return self.point is None

    def __repr__(self):
        return "identity" if self.point is None else repr(self.point)


def pic_identity(curve):
    return DivisorClass(curve, None)


def pic_add(c1: DivisorClass, c2: DivisorClass) -> DivisorClass:
    if c1.curve != c2.curve:
        raise ValueError("classes on different curves")
    return DivisorClass(c1.curve, ec_add(c1.curve, c1.point, c2.point))


def pic_neg(c: DivisorClass) -> DivisorClass:
    return DivisorClass(c.curve, ec_neg(c.point))


def pic_sub(c1, c2):
    return pic_add(c1, pic_neg(c2))


def pic_eq(c1: DivisorClass, c2: DivisorClass) -> bool:
    return c1 == c2


class Divisor:
    """A finite formal sum of rational points with nonzero multiplicities."""

    def __init__(self, curve: CurveModel, entries=()):
        self.curve = curve
        data = {}
        for point, n in dict(entries).items() if isinstance(entries, dict) \
                else entries:
            if n:
                data[point] = data.get(point, 0) + n
        self.entries = {p: n for p, n in data.items() if n}

    def __add__(self, other):
        out = dict(self.entries)
        for p, n in other.entries.items():
            out[p] = out.get(p, 0) + n
        return Divisor(self.curve, out)

    def __neg__(self):
        return Divisor(self.curve, {p: -n for p, n in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return (isinstance(other, Divisor) and self.curve == other.curve
                and self.entries == other.entries)

    def degree(self):
        return sum(self.entries.values())

    def __repr__(self):
        if not self.entries:
            return "0"
        return " + ".join("%d[%r]" % (n, p) for p, n in self.entries.items())


def class_of_divisor(d: Divisor) -> DivisorClass:
    """Reduce a divisor to its Pic X class (group-law sum of its points)."""
    if d.curve.kind == "line":
        return pic_identity(d.curve)
    acc = None
    for p, n in d.entries.items():
        acc = ec_add(d.curve, acc, ec_mul(d.curve, p, n))
    return DivisorClass(d.curve, acc)


# ---- ideals of O(X) ----------------------------------------------------

class OIdeal:
    """A nonzero ideal of O(X), generated by xi-free canonical elements."""

    def __init__(self, curve: CurveModel, generators):
        gens = [g for g in generators if not g.is_zero()]
        if not gens:
            raise ValueError("zero ideal of O(X)")
        for g in gens:
            if not g.is_ring_element():
                raise ValueError("generator not in O(X)")
            if g.curve != curve:
                raise ValueError("generator on the wrong curve")
        self.curve = curve
        self.generators = tuple(gens)

    @classmethod
    def whole_ring(cls, curve):
        return cls(curve, [GPoly.one(curve)])

    def extend(self) -> CIdeal:
        """The extended ideal I*Obar."""
        return CIdeal(self.curve, list(self.generators))

    def __eq__(self, other):
        return (isinstance(other, OIdeal) and self.curve == other.curve
                and self.extend() == other.extend())

    def __hash__(self):
        return hash(self.extend())

    def __repr__(self):
        from .poly import format_poly
        return "OIdeal(%s)" % ", ".join(format_poly(g)
                                        for g in self.generators)

    def product(self, other: "OIdeal") -> "OIdeal":
        return OIdeal(self.curve, [a * b for a in self.generators
                                   for b in other.generators])

    def power(self, n: int) -> "OIdeal":
        out = OIdeal.whole_ring(self.curve)
        for _ in range(n):
            out = out.product(self)
        return out

    def member(self, f: GPoly) -> bool:
        return self.extend().member(f)

    def is_whole_ring(self) -> bool:
        return self.member(GPoly.one(self.curve))

    def colength(self):
        """dim_Q of O(X)/I (finite for every nonzero ideal)."""
        gens = list(self.generators) + [GPoly.var_xi(self.curve)]
        n = CIdeal(self.curve, gens).colength()
        if n is None:
            raise AssertionError("nonzero O(X)-ideal with infinite colength")
        return n


def maximal_ideal(point: PointQ) -> OIdeal:
    curve = point.curve
    x = GPoly.var_x(curve)
    gens = [x - GPoly.const(curve, point.x)]
    if curve.is_elliptic:
        gens.append(GPoly.var_y(curve) - GPoly.const(curve, point.y))
    return OIdeal(curve, gens)


def valuation(ideal: OIdeal, point: PointQ) -> int:
    """min over generators of the order of vanishing at the point."""
    return min(valuation_of_elem(g, point) for g in ideal.generators)


def support_points(ideal: OIdeal):
    """Rational support of the ideal with valuations, as a dict point -> v.

    Raises NonRationalSupportError when part of the support is not a
    rational point (detected by comparing against the exact colength).
    """
    curve = ideal.curve
    # x-coordinates of the support lie among the roots of the gcd of the
    # norms of the generators (the norm is y-free).
    norm_gcd = []
    for g in ideal.generators:
        n = g * g.conj()
        norm_gcd = uv_gcd(norm_gcd, to_univar(n)) if norm_gcd \
            else to_univar(n)
    candidates = []
    for r in rational_roots(norm_gcd):
        if curve.kind == "line":
            candidates.append(PointQ(curve, r))
        else:
            s = sqrt_fraction(curve.rhs(r))
            if s is None:
                continue
            candidates.append(PointQ(curve, r, s))
            if s != 0:
                candidates.append(PointQ(curve, r, -s))
    out = {}
    for p in candidates:
        v = valuation(ideal, p)
        if v > 0:
            out[p] = v
    if sum(out.values()) != ideal.colength():
        raise NonRationalSupportError("non-rational support")
    return out


def divisor_of_ideal(ideal: OIdeal) -> Divisor:
    """-sum v_P(I) [P]  (the sign convention of the class map)."""
    return Divisor(ideal.curve, {p: -v for p, v in support_points(ideal).items()})


def _pole_basis(curve, n):
    """Monomials of O(X) with pole order <= n at infinity (order of x^i y^j
    is 2i + 3j on the elliptic model, i on the line)."""
    out = []
    if curve.kind == "line":
        for i in range(n + 1):
            out.append(GPoly(curve, {(0, i, 0): Fraction(1)}))
        return out
    for i in range(n // 2 + 1):
        for j in (0, 1):
            if 2 * i + 3 * j <= n:
                out.append(GPoly(curve, {(0, i, j): Fraction(1)}))
    return out


def class_of_ideal(ideal: OIdeal) -> DivisorClass:
    """The Pic X class paired with -div(I), for arbitrary (possibly
    irrationally supported) ideals.

    Reduction: pick g in I of minimal pole order n at infinity; then
    div(g) = div(I) + E with E effective of degree n - colength(I) <= 1,
    and the class of -div(I) is the class of E, read off the colength-<=1
    residual ideal (g) : I.
    """
    curve = ideal.curve
    if curve.kind == "line" or ideal.is_whole_ring():
        return pic_identity(curve)
    from .groebner import lift, normal_form
    from .linalg import nullspace
    d = ideal.colength()
    ext = ideal.extend()
    gb = ext.gb()
    g = None
    for n in range(1, d + 2):
        basis = _pole_basis(curve, n)
        nfs = [normal_form(lift(b), gb) for b in basis]
        monos = sorted({m for nf in nfs for m in nf})
        rows = [[nf.get(m, Fraction(0)) for nf in nfs] for m in monos]
        kern = nullspace(rows, ncols=len(basis))
        if kern:
            g = GPoly.zero(curve)
            for c, b in zip(kern[0], basis):
                if c:
                    g = g + b.scale(c)
            break
    if g is None:
        raise AssertionError("no small function found in the ideal")
    residual = CIdeal(curve, [g]).colon(ext)
    res_gens = residual.intersect_ring()
    if res_gens is None:
        raise AssertionError("residual ideal does not meet O(X)")
    res = OIdeal(curve, res_gens)
    e = res.colength()
    if e == 0:
        return pic_identity(curve)
    if e == 1:
        point = next(iter(support_points(res)))
        return DivisorClass(curve, point)
    raise AssertionError("residual colength %d > 1" % e)


def class_representative_ideal(c: DivisorClass) -> OIdeal:
    """An ideal whose class is c (the whole ring for the identity)."""
    if c.point is None:
        return OIdeal.whole_ring(c.curve)
    return maximal_ideal(c.point.negate())
