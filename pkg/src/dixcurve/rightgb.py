"""Right Groebner bases for right ideals of D.

Computations run in the free PBW cover Q<x, y>[d] (no curve relation in
the arithmetic) with the central element y^2 - x^3 - a x - b adjoined to
every right ideal on elliptic models.  Monomials are (de, xe, ye) with
coefficient functions on the left; the order is d-degree first, then
the pole-order weight 2 deg_x + 3 deg_y with ties to y, so the curve
relation leads with y^2 and normal forms keep the canonical y-degree
< 2 shape of the quotient.  All commutation corrections
drop the d-degree, so leading monomials are multiplicative and the usual
Buchberger algorithm applies with right multiplications only.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import comb

from .curves import CurveModel
from .divisors import OIdeal
from .dop import DOp, fat_normalize_gens
from .groebner import CIdeal
from .poly import GPoly


def nc_key(m):
    # partial-order degree first, then the pole-order weight 2x + 3y with
    # ties to y: the curve relation then has leading monomial y^2, so
    # normal forms keep y-degree < 2 (the canonical quotient shape)
    de, xe, ye = m
    return (de, 2 * xe + 3 * ye, ye)


def nc_divides(a, b):
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


# ---- free commutative polynomials in (x, y), used for delta powers -----

def _free_delta(p, a2):
    """delta = 2y d/dx + (3x^2 + a) d/dy on Q[x, y] without reduction."""
    out = {}
    for (xe, ye), c in p.items():
        if xe:
            m = (xe - 1, ye + 1)
            out[m] = out.get(m, Fraction(0)) + 2 * xe * c
        if ye:
            m1 = (xe + 2, ye - 1)
            out[m1] = out.get(m1, Fraction(0)) + 3 * ye * c
            if a2:
                m2 = (xe, ye - 1)
                out[m2] = out.get(m2, Fraction(0)) + a2 * ye * c
    return {m: c for m, c in out.items() if c}


def _free_delta_line(p):
    out = {}
    for (xe, ye), c in p.items():
        if xe:
            m = (xe - 1, ye)
            out[m] = out.get(m, Fraction(0)) + xe * c
    return out


@lru_cache(maxsize=None)
def _dpow_mono(kind, a_num, a_den, c, p, q):
    """Normal form of d^c * x^p y^q as a tuple of ((de,xe,ye), coeff)."""
    a2 = Fraction(a_num, a_den)
    out = {}
    dp = {(p, q): Fraction(1)}
    for l in range(c + 1):
        for (xe, ye), v in dp.items():
            m = (c - l, xe, ye)
            out[m] = out.get(m, Fraction(0)) + comb(c, l) * v
        dp = _free_delta_line(dp) if kind == "line" else _free_delta(dp, a2)
        if not dp:
            break
    return tuple(out.items())


def dpow_mono(curve: CurveModel, c, p, q):
    a = curve.a if curve.is_elliptic else Fraction(0)
    return _dpow_mono(curve.kind, a.numerator, a.denominator, c, p, q)


# ---- cover polynomials: dict (de, xe, ye) -> Fraction ------------------

def nc_add(f, g):
    out = dict(f)
    for m, c in g.items():
        c0 = out.get(m, Fraction(0)) + c
        if c0 == 0:
            out.pop(m, None)
        else:
            out[m] = c0
    return out


def nc_scale(f, c):
    if c == 0:
        return {}
    return {m: v * c for m, v in f.items()}


def nc_rmul_mono(curve, f, mono, coef=Fraction(1)):
    """f * (x^p y^q d^r), the only multiplication the right theory needs."""
    p, q, r = mono[1], mono[2], mono[0]
    out = {}
    for (de, xe, ye), c in f.items():
        for (de2, xe2, ye2), v in dpow_mono(curve, de, p, q):
            m = (de2 + r, xe + xe2, ye + ye2)
            c0 = out.get(m, Fraction(0)) + c * v * coef
            if c0 == 0:
                out.pop(m, None)
            else:
                out[m] = c0
    return out


def nc_mul(curve, f, g):
    out = {}
    for m, c in g.items():
        out = nc_add(out, nc_rmul_mono(curve, f, m, c))
    return out


def nc_lm(f):
    return max(f, key=nc_key)


def lift_dop(op: DOp):
    """DOp (quotient-canonical coefficients) -> cover polynomial."""
    out = {}
    for de, coeff in op.coeffs.items():
        for (ke, xe, ye), c in coeff.terms.items():
            if ke:
                raise ValueError("operator coefficient contains xi")
            out[(de, xe, ye)] = c
    return out


def drop_dop(f, curve: CurveModel) -> DOp:
    """Cover polynomial -> DOp, reducing by the curve relation."""
    by_order = {}
    for (de, xe, ye), c in f.items():
        g = by_order.setdefault(de, {})
        g[(0, xe, ye)] = g.get((0, xe, ye), Fraction(0)) + c
    return DOp(curve, {de: GPoly(curve, terms)
                       for de, terms in by_order.items()})


def curve_relation_nc(curve: CurveModel):
    if not curve.is_elliptic:
        return None
    rel = {(0, 3, 0): Fraction(1), (0, 0, 2): Fraction(-1),
           (0, 1, 0): curve.a, (0, 0, 0): curve.b}
    return {m: c for m, c in rel.items() if c != 0}


def right_normal_form(curve, f, basis):
    f = dict(f)
    out = {}
    binfo = [(nc_lm(g), g[nc_lm(g)], g) for g in basis if g]
    while f:
        lm = nc_lm(f)
        c = f[lm]
        for glm, glc, g in binfo:
            if nc_divides(glm, lm):
                mono = (lm[0] - glm[0], lm[1] - glm[1], lm[2] - glm[2])
                f = nc_add(f, nc_rmul_mono(curve, g, mono, -c / glc))
                break
        else:
            out[lm] = c
            del f[lm]
    return out


def right_spoly(curve, f, g):
    lf, lg = nc_lm(f), nc_lm(g)
    l = tuple(max(lf[i], lg[i]) for i in range(3))
    mf = (l[0] - lf[0], l[1] - lf[1], l[2] - lf[2])
    mg = (l[0] - lg[0], l[1] - lg[1], l[2] - lg[2])
    return nc_add(nc_rmul_mono(curve, f, mf, Fraction(1) / f[lf]),
                  nc_rmul_mono(curve, g, mg, Fraction(-1) / g[lg]))


def right_buchberger(curve, gens, pair_budget=10000):
    basis = []
    for g in gens:
        g = right_normal_form(curve, g, basis)
        if g:
            basis.append(g)
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    spent = 0
    while pairs:
        pairs.sort(key=lambda ij: nc_key(tuple(
            max(nc_lm(basis[ij[0]])[t], nc_lm(basis[ij[1]])[t])
            for t in range(3))), reverse=True)
        i, j = pairs.pop()
        spent += 1
        if spent > pair_budget:
            raise RuntimeError("right S-pair budget exhausted")
        s = right_normal_form(curve, right_spoly(curve, basis[i], basis[j]),
                              basis)
        if s:
            k = len(basis)
            basis.append(s)
            pairs.extend((k, t) for t in range(k))
    return right_interreduce(curve, basis)


def right_interreduce(curve, basis):
    basis = [g for g in basis if g]
    basis.sort(key=lambda g: nc_key(nc_lm(g)))
    minimal = []
    for g in basis:
        if not any(nc_divides(nc_lm(h), nc_lm(g)) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        rest = minimal[:i] + minimal[i + 1:]
        g = right_normal_form(curve, g, rest)
        out.append(nc_scale(g, Fraction(1) / g[nc_lm(g)]))
    out.sort(key=lambda g: nc_key(nc_lm(g)))
    return out


class ZeroRightIdealError(ValueError):
    pass


class RightIdealD:
    """A nonzero right ideal of D with a cached reduced right basis."""

    def __init__(self, curve: CurveModel, generators, pair_budget=10000):
        gens = [g for g in generators if not g.is_zero()]
        if not gens:
            raise ZeroRightIdealError("zero right ideal unsupported")
        for g in gens:
            if g.curve != curve:
                raise ValueError("generator on the wrong curve")
        self.curve = curve
        self.generators = tuple(gens)
        self.pair_budget = pair_budget
        self._rgb = None

    @classmethod
    def whole_ring(cls, curve):
        return cls(curve, [DOp.one(curve)])

    def rgb(self):
        """Reduced right Groebner basis as cover polynomials."""
        if self._rgb is None:
            gens = [lift_dop(g) for g in self.generators]
            rel = curve_relation_nc(self.curve)
            if rel is not None:
                gens.append(rel)
            self._rgb = right_buchberger(self.curve, gens, self.pair_budget)
        return self._rgb

    def rgb_ops(self):
        """The reduced basis as operators (curve-relation rows drop to 0,
        and rows differing by relation multiples collapse)."""
        out = []
        for g in self.rgb():
            op = drop_dop(g, self.curve)
            if not op.is_zero() and op not in out:
                out.append(op)
        return out

    def __eq__(self, other):
        return (isinstance(other, RightIdealD) and self.curve == other.curve
                and self.rgb() == other.rgb())

    def __hash__(self):
        return hash((self.curve,
                     tuple(frozenset(g.items()) for g in self.rgb())))

    def __repr__(self):
        return "RightIdealD(%s)" % ", ".join(repr(g) for g in self.rgb_ops())

    def member(self, op: DOp) -> bool:
        if op.is_zero():
            return True
        return not right_normal_form(self.curve, lift_dop(op), self.rgb())

    def contains(self, other: "RightIdealD") -> bool:
        return all(self.member(g) for g in other.generators)

    def sum(self, other: "RightIdealD") -> "RightIdealD":
        return RightIdealD(self.curve,
                           list(self.generators) + list(other.generators),
                           self.pair_budget)

    def is_whole_ring(self) -> bool:
        return self.member(DOp.one(self.curve))

    def gr_ideal(self) -> CIdeal:
        """The associated graded ideal of Obar, from principal symbols."""
        symbols = []
        for g in self.rgb():
            top = nc_lm(g)[0]
            terms = {}
            for (de, xe, ye), c in g.items():
                if de == top:
                    terms[(de, xe, ye)] = terms.get((de, xe, ye),
                                                    Fraction(0)) + c
            s = GPoly(self.curve, terms)
            if not s.is_zero():
                symbols.append(s)
        return CIdeal(self.curve, symbols)

    def intersect_O(self):
        """M meet O(X) as an OIdeal, or None when M is not fat."""
        gens = []
        for g in self.rgb():
            if nc_lm(g)[0] == 0:
                op = drop_dop(g, self.curve)
                if not op.is_zero():
                    gens.append(op.coeffs[0])
        if not gens:
            return None
        return OIdeal(self.curve, gens)

    def is_fat(self) -> bool:
        return self.intersect_O() is not None

    def fat_normalize(self) -> "RightIdealD":
        if self.is_fat():
            return self
        return RightIdealD(self.curve, fat_normalize_gens(self.generators),
                           self.pair_budget)


# ---- module Groebner bases and syzygy symbols (Appendix B support) -----
#
# Vectors over the cover live in positions 0..m: position 0 carries the
# graph component sum g_i q_i, positions 1..m carry the q_i.  The order
# puts position 0 above everything (elimination), and orders the rest by
# shifted weight de + s_i first, so that the zero-graph elements of a
# basis form a syzygy basis whose shifted symbols present gr_s M.

def mv_key(mm, shifts):
    pos, (de, xe, ye) = mm
    if pos == 0:
        return (1, de, 2 * xe + 3 * ye, ye, 0)
    return (0, de + shifts[pos - 1], 2 * xe + 3 * ye, ye, -pos)


def mv_lm(v, shifts):
    return max(v, key=lambda mm: mv_key(mm, shifts))


def mv_add(v, w):
    out = dict(v)
    for mm, c in w.items():
        c0 = out.get(mm, Fraction(0)) + c
        if c0 == 0:
            out.pop(mm, None)
        else:
            out[mm] = c0
    return out


def mv_rmul_mono(curve, v, mono, coef=Fraction(1)):
    out = {}
    for (pos, m), c in v.items():
        for m2, cc in nc_rmul_mono(curve, {m: c}, mono, coef).items():
            mm = (pos, m2)
            c0 = out.get(mm, Fraction(0)) + cc
            if c0 == 0:
                out.pop(mm, None)
            else:
                out[mm] = c0
    return out


def mv_normal_form(curve, v, basis, shifts):
    v = dict(v)
    out = {}
    binfo = [(mv_lm(g, shifts), g[mv_lm(g, shifts)], g) for g in basis if g]
    while v:
        lm = mv_lm(v, shifts)
        c = v[lm]
        for glm, glc, g in binfo:
            if glm[0] == lm[0] and nc_divides(glm[1], lm[1]):
                mono = tuple(lm[1][i] - glm[1][i] for i in range(3))
                v = mv_add(v, mv_rmul_mono(curve, g, mono, -c / glc))
                break
        else:
            out[lm] = c
            del v[lm]
    return out


def mv_content_scale(v):
    """Scale to a primitive integer vector (keeps coefficients small)."""
    num = 0
    den = 1
    for c in v.values():
        num = math.gcd(num, c.numerator)
        den = den * c.denominator // math.gcd(den, c.denominator)
    s = Fraction(den, num)
    return {mm: c * s for mm, c in v.items()}


def mv_buchberger(curve, gens, shifts, pair_budget=10000):
    basis = []
    for g in gens:
        g = mv_normal_form(curve, g, basis, shifts)
        if g:
            basis.append(mv_content_scale(g))
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    spent = 0
    while pairs:
        # normal strategy: smallest same-position lcm first
        def pair_key(ij):
            li = mv_lm(basis[ij[0]], shifts)
            lj = mv_lm(basis[ij[1]], shifts)
            if li[0] != lj[0]:
                return (0, 0, 0, 0, 0)
            l = tuple(max(li[1][t], lj[1][t]) for t in range(3))
            return mv_key((li[0], l), shifts)
        pairs.sort(key=pair_key, reverse=True)
        i, j = pairs.pop()
        spent += 1
        if spent > pair_budget:
            raise RuntimeError("module S-pair budget exhausted")
        li, lj = mv_lm(basis[i], shifts), mv_lm(basis[j], shifts)
        if li[0] != lj[0]:
            continue
        l = tuple(max(li[1][t], lj[1][t]) for t in range(3))
        mi = tuple(l[t] - li[1][t] for t in range(3))
        mj = tuple(l[t] - lj[1][t] for t in range(3))
        s = mv_add(
            mv_rmul_mono(curve, basis[i], mi,
                         Fraction(1) / basis[i][li]),
            mv_rmul_mono(curve, basis[j], mj,
                         Fraction(-1) / basis[j][lj]))
        s = mv_normal_form(curve, s, basis, shifts)
        if s:
            k = len(basis)
            basis.append(mv_content_scale(s))
            pairs.extend((k, t) for t in range(k))
    return basis


def syzygy_symbol_matrix(m: RightIdealD, shifts):
    """Rows over Obar presenting gr_s M = (+ Obar(-s_i)) / im Psi for the
    good filtration M_k = sum g_i D_{<= k - s_i}.

    Returns the list of symbol rows (length = number of generators); rows
    coming from curve-relation syzygies reduce to zero and are dropped.
    """
    curve = m.curve
    gens = list(m.generators)
    if len(shifts) != len(gens):
        raise ValueError("one shift per generator required")
    vecs = []
    for i, g in enumerate(gens):
        v = {(0, mono): c for mono, c in lift_dop(g).items()}
        v[(i + 1, (0, 0, 0))] = Fraction(1)
        vecs.append(v)
    rel = curve_relation_nc(curve)
    if rel is not None:
        vecs.append({(0, mono): c for mono, c in rel.items()})
        # rel is central, so (0, .., rel e_i, .., 0) lies in the graph
        # module: it is (g_i, e_i) rel - (rel, 0) g_i.  Adjoining these
        # rows keeps every position reduced modulo the curve.
        for i in range(len(gens)):
            vecs.append({(i + 1, mono): c for mono, c in rel.items()})
    basis = mv_buchberger(curve, vecs, shifts)
    syz = [v for v in basis if not any(mm[0] == 0 for mm in v)]
    # prune rows reducible against the remaining ones: they do not change
    # the submodule the rows generate, only the Groebner property
    kept = []
    for idx, v in enumerate(syz):
        others = kept + syz[idx + 1:]
        if mv_normal_form(curve, v, others, shifts):
            kept.append(v)
    rows = []
    for v in kept:
        deg = max(mm[1][0] + shifts[mm[0] - 1] for mm in v)
        row = []
        nonzero = False
        for i in range(len(gens)):
            terms = {}
            for (pos, (de, xe, ye)), c in v.items():
                if pos == i + 1 and de + shifts[i] == deg:
                    terms[(de, xe, ye)] = terms.get((de, xe, ye),
                                                    Fraction(0)) + c
            s = GPoly(curve, terms)
            row.append(s)
            if not s.is_zero():
                nonzero = True
        if nonzero:
            rows.append(row)
    return rows
