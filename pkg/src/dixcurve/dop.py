"""The ring D = O(X)[d; delta] in PBW normal form, its action on O(X),
skew-Euclidean arithmetic over K[d] (K the fraction field of O(X)), and
fat-ideal normalization.

PBW normal form keeps all functions to the LEFT of powers of d; the
commutation rule is d*f = f*d + delta(f) with delta the canonical
derivation of the curve model.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .curves import CurveModel
from .poly import (GPoly, PolyParseError, _Parser, _tokenize, format_poly,
                   to_univar, from_univar, uv_divmod, uv_gcd, uv_lcm)


class DOp:
    """A differential operator: map d-exponent -> nonzero RingElem."""

    __slots__ = ("curve", "coeffs")

    def __init__(self, curve: CurveModel, coeffs=None):
        data = {}
        for k, c in (coeffs or {}).items():
            if c.is_zero():
                continue
            if not c.is_ring_element():
                raise ValueError("operator coefficient not in O(X)")
            if c.curve != curve:
                raise ValueError("coefficient on the wrong curve")
            data[k] = c
        self.curve = curve
        self.coeffs = data

    @classmethod
    def zero(cls, curve):
        return cls(curve, {})

    @classmethod
    def one(cls, curve):
        return cls(curve, {0: GPoly.one(curve)})

    @classmethod
    def from_poly(cls, f: GPoly):
        return cls(f.curve, {0: f})

    @classmethod
    def d(cls, curve, k=1):
        return cls(curve, {k: GPoly.one(curve)})

    def is_zero(self):
        return not self.coeffs

    def order(self):
        """Max d-exponent; -1 for the zero operator."""
        return max(self.coeffs) if self.coeffs else -1

    def leading_coeff(self) -> GPoly:
        return self.coeffs[self.order()]

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, GPoly.zero(self.curve)) + c
        return DOp(self.curve, out)

    def __neg__(self):
        return DOp(self.curve, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        out = {}
        zero = GPoly.zero(self.curve)
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                # d^i * b = sum_l C(i,l) delta^l(b) d^(i-l)
                db = b
                for l in range(i + 1):
                    if not db.is_zero():
                        k = i - l + j
                        out[k] = out.get(k, zero) + (a * db).scale(comb(i, l))
                    db = db.delta()
        return DOp(self.curve, out)

    def scale(self, c):
        return DOp(self.curve, {k: v.scale(c) for k, v in self.coeffs.items()})

    def lmul_poly(self, f: GPoly):
        return DOp(self.curve, {k: f * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        return (isinstance(other, DOp) and self.curve == other.curve
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.curve, frozenset((k, c) for k, c
                                           in self.coeffs.items())))

    def apply(self, f: GPoly) -> GPoly:
        """The natural action: sum_j c_j delta^j(f)."""
        if not f.is_ring_element():
            raise ValueError("operators act on elements of O(X)")
        out = GPoly.zero(self.curve)
        top = self.order()
        df = f
        for j in range(top + 1):
            c = self.coeffs.get(j)
            if c is not None:
                out = out + c * df
            df = df.delta()
        return out

    def symbol(self) -> GPoly:
        """Principal symbol: leading coefficient times xi^order."""
        if self.is_zero():
            return GPoly.zero(self.curve)
        n = self.order()
        return self.coeffs[n] * (GPoly.var_xi(self.curve) ** n)

    def _check(self, other):
        if not isinstance(other, DOp) or other.curve != self.curve:
            raise TypeError("operator arithmetic requires matching curves")

    def __repr__(self):
        return format_dop(self)


def dop_mul(a: DOp, b: DOp) -> DOp:
    return a * b


def dop_apply(d: DOp, f: GPoly) -> GPoly:
    return d.apply(f)


def parse_dop(text: str, curve: CurveModel) -> DOp:
    """Operator grammar: the polynomial grammar plus `d`; output is PBW."""
    atoms = {"x": DOp.from_poly(GPoly.var_x(curve)), "d": DOp.d(curve)}
    if curve.is_elliptic:
        atoms["y"] = DOp.from_poly(GPoly.var_y(curve))
    p = _Parser(_tokenize(text), atoms,
                const=lambda c: DOp.from_poly(GPoly.const(curve, c)),
                mul=lambda a, b: a * b,
                add=lambda a, b: a + b,
                neg=lambda a: -a)
    return p.parse()


def format_dop(op: DOp) -> str:
    if op.is_zero():
        return "0"
    pieces = []
    for k in sorted(op.coeffs, reverse=True):
        c = op.coeffs[k]
        dpart = "" if k == 0 else ("d" if k == 1 else "d^%d" % k)
        neg = False
        if len(c.terms) == 1:
            ((mono, coef),) = c.terms.items()
            if coef < 0:
                neg, c = True, -c
            ctext = format_poly(c)
            if not dpart:
                body = ctext
            elif c == GPoly.one(op.curve):
                body = dpart
            else:
                body = "%s*%s" % (ctext, dpart)
        elif dpart:
            body = "(%s)*%s" % (format_poly(c), dpart)
        else:
            body = format_poly(c)
        if not pieces:
            pieces.append("-" + body if neg else body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


# ---- the fraction field K and skew polynomials K[d] --------------------

class KElem:
    """An element of K = Frac O(X), as num/den with den in Q[x]."""

    __slots__ = ("curve", "num", "den")

    def __init__(self, curve: CurveModel, num: GPoly, den: GPoly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not den.is_y_free():
            raise ValueError("denominator must lie in Q[x]")
        self.curve = curve
        self.num, self.den = _kreduce(num, den)

    @classmethod
    def from_poly(cls, f: GPoly):
        return cls(f.curve, f, GPoly.one(f.curve))

    @classmethod
    def zero(cls, curve):
        return cls.from_poly(GPoly.zero(curve))

    @classmethod
    def one(cls, curve):
        return cls.from_poly(GPoly.one(curve))

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        return KElem(self.curve, self.num * other.den + other.num * self.den,
                     self.den * other.den)

    def __neg__(self):
        return KElem(self.curve, -self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return KElem(self.curve, self.num * other.num, self.den * other.den)

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.num.is_y_free():
            return KElem(self.curve, self.den, self.num)
        # rationalize: 1/(A+By) = (A-By) / (A^2 - B^2 f)
        norm = self.num * self.num.conj()
        return KElem(self.curve, self.den * self.num.conj(), norm)

    def __truediv__(self, other):
        return self * other.inv()

    def delta(self):
        """The canonical derivation extended to K by the quotient rule."""
        num = self.num.delta() * self.den - self.num * self.den.delta()
        return KElem(self.curve, num, self.den * self.den)

    def __eq__(self, other):
        return (isinstance(other, KElem) and self.curve == other.curve
                and self.num == other.num and self.den == other.den)

    def __repr__(self):
        if self.den == GPoly.one(self.curve):
            return format_poly(self.num)
        return "(%s)/(%s)" % (format_poly(self.num), format_poly(self.den))


def _kreduce(num: GPoly, den: GPoly):
    """Cancel the Q[x]-content and make the denominator monic."""
    curve = num.curve
    if num.is_zero():
        return num, GPoly.one(curve)
    a_part = {m: c for m, c in num.terms.items() if m[2] == 0}
    b_part = {(m[0], m[1], 0): c for m, c in num.terms.items() if m[2] == 1}
    g = to_univar(den)
    for part in (a_part, b_part):
        if part:
            g = uv_gcd(g, to_univar(GPoly(curve, part)))
    gp = from_univar(curve, g)
    num2 = num.divide_exact(gp)
    den2 = den.divide_exact(gp)
    lc = den2.leading_coeff()
    return num2.scale(Fraction(1) / lc), den2.monic()


class KSkewPoly:
    """Skew polynomial over K: map d-exponent -> nonzero KElem."""

    __slots__ = ("curve", "coeffs")

    def __init__(self, curve: CurveModel, coeffs=None):
        self.curve = curve
        self.coeffs = {k: c for k, c in (coeffs or {}).items()
                       if not c.is_zero()}

    @classmethod
    def from_dop(cls, op: DOp):
        return cls(op.curve, {k: KElem.from_poly(c)
                              for k, c in op.coeffs.items()})

    def is_zero(self):
        return not self.coeffs

    def order(self):
        return max(self.coeffs) if self.coeffs else -1

    def leading_coeff(self) -> KElem:
        return self.coeffs[self.order()]

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, KElem.zero(self.curve)) + c
        return KSkewPoly(self.curve, out)

    def __neg__(self):
        return KSkewPoly(self.curve, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        zero = KElem.zero(self.curve)
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                db = b
                for l in range(i + 1):
                    if not db.is_zero():
                        k = i - l + j
                        term = a * db
                        if comb(i, l) != 1:
                            term = term * KElem.from_poly(
                                GPoly.const(self.curve, comb(i, l)))
                        out[k] = out.get(k, zero) + term
                    db = db.delta()
        return KSkewPoly(self.curve, out)

    def __eq__(self, other):
        return (isinstance(other, KSkewPoly) and self.curve == other.curve
                and self.coeffs == other.coeffs)

    def monomial(self, c: KElem, k: int):
        return KSkewPoly(self.curve, {k: c})

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for k in sorted(self.coeffs, reverse=True):
            dpart = "" if k == 0 else ("d" if k == 1 else "d^%d" % k)
            c = repr(self.coeffs[k])
            bits.append(("(%s)" % c) + ("*%s" % dpart if dpart else ""))
        return " + ".join(bits)


def skew_right_divide(a: KSkewPoly, b: KSkewPoly):
    """Division a = q*b + r with order(r) < order(b); q on the left of b."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero skew polynomial")
    curve = a.curve
    q = KSkewPoly(curve)
    r = a
    blc = b.leading_coeff()
    while not r.is_zero() and r.order() >= b.order():
        k = r.order() - b.order()
        c = r.leading_coeff() / blc
        mono = KSkewPoly(curve, {k: c})
        q = q + mono
        r = r - mono * b
    return q, r


def skew_left_divide(a: KSkewPoly, b: KSkewPoly):
    """Division a = b*q + r with order(r) < order(b); q on the right.

    This is the division that stays inside the right ideal generated by a
    and b, so it drives the right-ideal Euclidean algorithm.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by zero skew polynomial")
    curve = a.curve
    q = KSkewPoly(curve)
    r = a
    blc = b.leading_coeff()
    while not r.is_zero() and r.order() >= b.order():
        k = r.order() - b.order()
        c = r.leading_coeff() / blc
        mono = KSkewPoly(curve, {k: c})
        q = q + mono
        r = r - b * mono
    return q, r


def skew_right_ideal_gcd(polys):
    """A generator of the right ideal of K[d] spanned by the inputs."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise ValueError("zero ideal of K[d]")
    g = polys[0]
    for p in polys[1:]:
        a, b = p, g
        while not b.is_zero():
            _, r = skew_left_divide(a, b)
            a, b = b, r
        g = a
    return g


def clear_denominators(p: KSkewPoly) -> DOp:
    """Left-multiply by the lcm of the denominators to land in D."""
    curve = p.curve
    h = [Fraction(1)]
    for c in p.coeffs.values():
        h = uv_lcm(h, to_univar(c.den))
    out = {}
    for k, c in p.coeffs.items():
        factor = from_univar(curve, uv_divmod(h, to_univar(c.den))[0])
        out[k] = c.num * factor
    return DOp(curve, out)


def fat_normalize_gens(gens):
    """Lemma-4.1 normalization of a right-ideal generating set.

    Computes a generator a of the extension to K[d] by the right-ideal
    Euclidean algorithm, divides every generator exactly on the left by a,
    and clears denominators with a single ring element.  The output
    generates a right ideal isomorphic to the input one and fat.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("zero right ideal")
    curve = gens[0].curve
    skew = [KSkewPoly.from_dop(g) for g in gens]
    a = skew_right_ideal_gcd(skew)
    quotients = []
    for s in skew:
        q, r = skew_left_divide(s, a)
        if not r.is_zero():
            raise AssertionError("generator not divisible by the skew gcd")
        quotients.append(q)
    # one common denominator-clearing multiplier for the whole family
    h = [Fraction(1)]
    for q in quotients:
        for c in q.coeffs.values():
            h = uv_lcm(h, to_univar(c.den))
    out = []
    for q in quotients:
        cleared = {}
        for k, c in q.coeffs.items():
            factor = from_univar(curve, uv_divmod(h, to_univar(c.den))[0])
            cleared[k] = c.num * factor
        op = DOp(curve, cleared)
        if not op.is_zero():
            out.append(op)
    return out
