"""Classification invariants of right ideals: the ideal I with
F** = I*Obar, the integer n, the class maps gamma_bar and gamma, and the
Hilbert-scheme point ideal of colength n.
"""

from __future__ import annotations

from fractions import Fraction

from .divisors import DivisorClass, OIdeal, class_of_ideal
from .dop import KElem
from .groebner import CIdeal
from .poly import GPoly, from_univar, to_univar, uv_divmod, uv_lcm
from .rightgb import RightIdealD


# ---- commutative fat normalization over K[xi] --------------------------

def _to_kxi(f: GPoly):
    """GPoly -> dict xi-exponent -> KElem."""
    curve = f.curve
    out = {}
    for (ke, xe, ye), c in f.terms.items():
        g = out.setdefault(ke, {})
        g[(0, xe, ye)] = c
    return {k: KElem.from_poly(GPoly(curve, terms))
            for k, terms in out.items()}


def _kxi_mul(curve, a, b):
    out = {}
    zero = KElem.zero(curve)
    for i, c in a.items():
        for j, d in b.items():
            out[i + j] = out.get(i + j, zero) + c * d
    return {k: c for k, c in out.items() if not c.is_zero()}


def _kxi_divmod(curve, a, b):
    q = {}
    r = dict(a)
    db = max(b)
    lb = b[db]
    while r and max(r) >= db:
        k = max(r) - db
        c = r[max(r)] / lb
        q[k] = q.get(k, KElem.zero(curve)) + c
        for j, d in b.items():
            nk = j + k
            v = r.get(nk, KElem.zero(curve)) - d * c
            if v.is_zero():
                r.pop(nk, None)
            else:
                r[nk] = v
    return q, r


def _kxi_gcd(curve, a, b):
    while b:
        _, r = _kxi_divmod(curve, a, b)
        a, b = b, r
    return a


def fat_normalize_comm(f: CIdeal) -> CIdeal:
    """Lemma-4.1 normalization for ideals of Obar: divide by the K[xi]
    gcd of the generators and clear denominators with one element."""
    curve = f.curve
    kgens = [_to_kxi(g) for g in f.generators]
    g = kgens[0]
    for h in kgens[1:]:
        g = _kxi_gcd(curve, g, h)
    quotients = []
    for h in kgens:
        q, r = _kxi_divmod(curve, h, g)
        if r:
            raise AssertionError("generator not divisible by the K[xi] gcd")
        quotients.append(q)
    den_lcm = [Fraction(1)]
    for q in quotients:
        for c in q.values():
            den_lcm = uv_lcm(den_lcm, to_univar(c.den))
    out = []
    xi = GPoly.var_xi(curve)
    for q in quotients:
        p = GPoly.zero(curve)
        for k, c in q.items():
            factor = from_univar(curve, uv_divmod(den_lcm,
                                                  to_univar(c.den))[0])
            p = p + c.num * factor * (xi ** k)
        if not p.is_zero():
            out.append(p)
    return CIdeal(curve, out)


# ---- the invariants ----------------------------------------------------

def extract_I(f: CIdeal) -> OIdeal:
    """The unique ideal I of O(X) with divisorial_hull(F) = I*Obar."""
    if not f.is_fat():
        f = fat_normalize_comm(f)
        if not f.is_fat():
            raise AssertionError("fat normalization failed")
    hull = f.divisorial_hull()
    gens = hull.intersect_ring()
    if gens is None:
        raise AssertionError("divisorial hull of a fat ideal meets O(X)")
    ideal = OIdeal(f.curve, gens)
    if ideal.extend() != hull:
        raise AssertionError("hull is not extended from O(X)")
    return ideal


def hilb_point(f: CIdeal) -> CIdeal:
    """The integral ideal F * I^{-1} of colength n(F)."""
    ideal = extract_I(f)
    ext = ideal.extend()
    g = f.colon(ext)
    if g.product(ext) != f:
        raise AssertionError("fractional division verification failed")
    return g


def n_of_graded(f: CIdeal) -> int:
    n = hilb_point(f).colength()
    if n is None:
        raise AssertionError("hilb point ideal has infinite colength")
    return n


def n_invariant(m: RightIdealD) -> int:
    return n_of_graded(m.fat_normalize().gr_ideal())


def gamma_bar(f: CIdeal) -> DivisorClass:
    return class_of_ideal(extract_I(f))


def gamma(m: RightIdealD) -> DivisorClass:
    return gamma_bar(m.fat_normalize().gr_ideal())
