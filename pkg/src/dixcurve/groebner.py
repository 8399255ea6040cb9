"""Commutative Groebner engine for ideals of Obar = O(X)[xi].

All basis computations happen in the free polynomial ring Q[t, xi, x, y]
with the curve relation adjoined to every generating set; t is an
auxiliary variable used only for ideal intersections.  The fixed order is
t-degree, then xi-degree, then graded reverse lex on (x, y) — an
elimination order for t and for xi.
"""

from __future__ import annotations

from fractions import Fraction

from .curves import CurveModel
from .poly import GPoly

M4 = tuple  # (te, ke, xe, ye)


class ZeroIdealError(ValueError):
    pass


def m4_key(m):
    te, ke, xe, ye = m
    return (te, ke, xe + ye, -ye)


def m4_mul(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def m4_divides(a, b):
    return all(a[i] <= b[i] for i in range(4))


def m4_div(b, a):
    return (b[0] - a[0], b[1] - a[1], b[2] - a[2], b[3] - a[3])


def m4_lcm(a, b):
    return tuple(max(a[i], b[i]) for i in range(4))


def p4_add(p, q):
    out = dict(p)
    for m, c in q.items():
        c0 = out.get(m, Fraction(0)) + c
        if c0 == 0:
            out.pop(m, None)
        else:
            out[m] = c0
    return out


def p4_scale(p, c):
    if c == 0:
        return {}
    return {m: v * c for m, v in p.items()}


def p4_mul_term(p, m, c):
    return {m4_mul(mm, m): v * c for mm, v in p.items()}


def p4_mul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = m4_mul(m1, m2)
            c0 = out.get(m, Fraction(0)) + c1 * c2
            if c0 == 0:
                out.pop(m, None)
            else:
                out[m] = c0
    return out


def p4_lm(p):
    return max(p, key=m4_key)


def lift(p: GPoly):
    """GPoly (3-variable canonical form) -> term dict with te = 0."""
    return {(0, ke, xe, ye): c for (ke, xe, ye), c in p.terms.items()}


def drop(p, curve: CurveModel) -> GPoly:
    """Term dict with te = 0 -> canonical GPoly (curve relation applied)."""
    terms = {}
    for (te, ke, xe, ye), c in p.items():
        if te != 0:
            raise ValueError("cannot drop a polynomial involving t")
        terms[(ke, xe, ye)] = terms.get((ke, xe, ye), Fraction(0)) + c
    return GPoly(curve, terms)


def curve_relation4(curve: CurveModel):
    if not curve.is_elliptic:
        return None
    rel = {(0, 0, 0, 2): Fraction(1), (0, 0, 3, 0): Fraction(-1),
           (0, 0, 1, 0): -curve.a, (0, 0, 0, 0): -curve.b}
    return {m: c for m, c in rel.items() if c != 0}


def normal_form(p, basis):
    """Remainder of p on division by the list of term dicts `basis`."""
    p = dict(p)
    out = {}
    binfo = [(p4_lm(g), g[p4_lm(g)], g) for g in basis if g]
    while p:
        lm = p4_lm(p)
        c = p[lm]
        for glm, glc, g in binfo:
            if m4_divides(glm, lm):
                fac = c / glc
                mdiff = m4_div(lm, glm)
                p = p4_add(p, p4_mul_term(g, mdiff, -fac))
                break
        else:
            out[lm] = c
            del p[lm]
    return out


def spoly(f, g):
    lf, lg = p4_lm(f), p4_lm(g)
    l = m4_lcm(lf, lg)
    return p4_add(p4_mul_term(f, m4_div(l, lf), Fraction(1) / f[lf]),
                  p4_mul_term(g, m4_div(l, lg), Fraction(-1) / g[lg]))


def buchberger(gens, pair_budget=100000):
    """Reduced Groebner basis of the given term dicts under the fixed order."""
    basis = []
    for g in gens:
        g = normal_form(g, basis)
        if g:
            basis.append(g)
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    spent = 0
    while pairs:
        # normal selection: smallest lcm first
        pairs.sort(key=lambda ij: m4_key(
            m4_lcm(p4_lm(basis[ij[0]]), p4_lm(basis[ij[1]]))), reverse=True)
        i, j = pairs.pop()
        spent += 1
        if spent > pair_budget:
            raise RuntimeError("S-pair budget exhausted")
        li, lj = p4_lm(basis[i]), p4_lm(basis[j])
        if m4_lcm(li, lj) == m4_mul(li, lj):
            continue  # coprime leading monomials
        s = normal_form(spoly(basis[i], basis[j]), basis)
        if s:
            k = len(basis)
            basis.append(s)
            pairs.extend((k, t) for t in range(k))
    return interreduce(basis)


def interreduce(basis):
    # minimalize
    basis = [g for g in basis if g]
    basis.sort(key=lambda g: m4_key(p4_lm(g)))
    minimal = []
    for g in basis:
        lm = p4_lm(g)
        if not any(m4_divides(p4_lm(h), lm) for h in minimal):
            minimal.append(g)
    # tail-reduce and normalize
    out = []
    for i, g in enumerate(minimal):
        rest = minimal[:i] + minimal[i + 1:]
        g = normal_form(g, rest)
        lc = g[p4_lm(g)]
        out.append(p4_scale(g, Fraction(1) / lc))
    out.sort(key=lambda g: m4_key(p4_lm(g)))
    return out


class CIdeal:
    """A nonzero ideal of Obar with a cached reduced Groebner basis.

    The basis always includes the consequences of the curve relation, so
    two CIdeals are equal iff they define the same ideal of Obar.
    """

    def __init__(self, curve: CurveModel, generators):
        gens = [g for g in generators if not g.is_zero()]
        if not gens:
            raise ZeroIdealError("zero ideal unsupported")
        for g in gens:
            if g.curve != curve:
                raise ValueError("generator on the wrong curve")
        self.curve = curve
        self.generators = tuple(gens)
        self._gb = None

    @classmethod
    def whole_ring(cls, curve):
        return cls(curve, [GPoly.one(curve)])

    def gb(self):
        """Reduced Groebner basis as term dicts (te = 0 throughout)."""
        if self._gb is None:
            gens = [lift(g) for g in self.generators]
            rel = curve_relation4(self.curve)
            if rel is not None:
                gens.append(rel)
            self._gb = buchberger(gens)
        return self._gb

    def gb_polys(self):
        return [drop(g, self.curve) for g in self.gb()]

    def __eq__(self, other):
        return (isinstance(other, CIdeal) and self.curve == other.curve
                and self.gb() == other.gb())

    def __hash__(self):
        return hash((self.curve,
                     tuple(frozenset(g.items()) for g in self.gb())))

    def __repr__(self):
        from .poly import format_poly
        return "CIdeal(%s)" % ", ".join(format_poly(g) for g in self.gb_polys())

    # ---- membership and comparisons -----------------------------------
    def member(self, f: GPoly) -> bool:
        return not normal_form(lift(f), self.gb())

    def contains(self, other: "CIdeal") -> bool:
        return all(self.member(g) for g in other.generators)

    def is_whole_ring(self) -> bool:
        return self.member(GPoly.one(self.curve))

    def _small_gens(self):
        """The reduced basis: a small canonical generating set."""
        return [g for g in self.gb_polys() if not g.is_zero()]

    # ---- ring operations ----------------------------------------------
    def product(self, other: "CIdeal") -> "CIdeal":
        return CIdeal(self.curve, [a * b for a in self._small_gens()
                                   for b in other._small_gens()])

    def sum(self, other: "CIdeal") -> "CIdeal":
        return CIdeal(self.curve, list(self.generators) + list(other.generators))

    def intersection(self, other: "CIdeal") -> "CIdeal":
        t = (1, 0, 0, 0)
        gens = []
        for g in self._small_gens():
            gens.append(p4_mul_term(lift(g), t, Fraction(1)))
        for g in other._small_gens():
            gl = lift(g)
            gens.append(p4_add(gl, p4_mul_term(gl, t, Fraction(-1))))
        rel = curve_relation4(self.curve)
        if rel is not None:
            gens.append(rel)
            gens.append(p4_mul_term(rel, t, Fraction(1)))
        gb = buchberger(gens)
        kept = [drop(g, self.curve) for g in gb if p4_lm(g)[0] == 0]
        kept = [g for g in kept if not g.is_zero()]
        if not kept:
            raise AssertionError("intersection of nonzero ideals is nonzero")
        return CIdeal(self.curve, kept)

    def colon_elem(self, g: GPoly) -> "CIdeal":
        """(self : g) = {h : h*g in self}."""
        if g.is_zero():
            raise ZeroDivisionError("colon by zero element")
        inter = self.intersection(CIdeal(self.curve, [g]))
        quots = []
        for h in inter.gb_polys():
            if h.is_zero():
                continue
            q = h.divide_exact(g)
            if q is None:
                raise AssertionError("element of I cap (g) not divisible by g")
            if not q.is_zero():
                quots.append(q)
        if not quots:
            raise AssertionError("colon ideal is zero")
        return CIdeal(self.curve, quots)

    def colon(self, other: "CIdeal") -> "CIdeal":
        out = None
        for g in other._small_gens():
            c = self.colon_elem(g)
            out = c if out is None else out.intersection(c)
        return out

    # ---- colength ------------------------------------------------------
    def standard_monomials(self):
        """Monomial basis (ke, xe, ye) of Obar/self, or None when infinite."""
        lms = [p4_lm(g) for g in self.gb()]
        lms3 = [(ke, xe, ye) for (te, ke, xe, ye) in lms]
        elliptic = self.curve.is_elliptic
        bound = [None, None, None]
        for (ke, xe, ye) in lms3:
            if xe == 0 and ye == 0:
                bound[0] = ke if bound[0] is None else min(bound[0], ke)
            if ke == 0 and ye == 0:
                bound[1] = xe if bound[1] is None else min(bound[1], xe)
            if ke == 0 and xe == 0:
                bound[2] = ye if bound[2] is None else min(bound[2], ye)
        if bound[0] is None or bound[1] is None:
            return None
        if elliptic and bound[2] is None:
            return None
        ymax = bound[2] if elliptic else 1
        out = []
        for ke in range(bound[0]):
            for xe in range(bound[1]):
                for ye in range(ymax):
                    m = (ke, xe, ye)
                    if not any(all(l[i] <= m[i] for i in range(3))
                               for l in lms3):
                        out.append(m)
        return out

    def colength(self):
        """dim_Q of Obar/self, or None when infinite."""
        sm = self.standard_monomials()
        return None if sm is None else len(sm)

    # ---- divisorial machinery ------------------------------------------
    def divisorial_hull(self) -> "CIdeal":
        """The bidual F** computed as (u) : ((u) : F) for u in F."""
        u = self.generators[0]
        pu = CIdeal(self.curve, [u])
        inner = pu.colon(self)
        return pu.colon(inner)

    def intersect_ring(self):
        """Generators of self meet O(X), or None when the intersection is zero."""
        out = []
        for g in self.gb():
            lm = p4_lm(g)
            if lm[0] == 0 and lm[1] == 0:
                p = drop(g, self.curve)
                if not p.is_zero():
                    if not p.is_ring_element():
                        raise AssertionError("elimination produced xi terms")
                    out.append(p)
        return out or None

    def is_fat(self) -> bool:
        return self.intersect_ring() is not None
