"""Primary decomposable subspaces of O(X) and the Cannings-Holland
correspondence V -> M_V = {D : D.O(X) <= V}, inverse M -> M.O(X).

A subspace is encoded per support point by jet conditions: covectors of
length N annihilating the order-<N jet in the local parameter.  That is
exactly the data of a primary decomposable subspace with rational
support, and the multiplicity n_x of Div is a matrix rank.
"""

from __future__ import annotations

from fractions import Fraction

from .curves import CurveModel, PointQ
from .divisors import (Divisor, NonRationalSupportError, OIdeal,
                       maximal_ideal, sqrt_fraction, support_points)
from .dop import DOp
from .groebner import CIdeal
from .jets import jet, series_mul
from .linalg import nullspace, rref
from .poly import GPoly
from .rightgb import RightIdealD


class OrderBoundExceededError(RuntimeError):
    """Raised when M_V fails to certify within the order cap; carries the
    partial right ideal computed at the cap."""

    def __init__(self, partial):
        super().__init__("order bound exceeded")
        self.partial = partial


class PrimaryData:
    """Jet conditions at one point: V_x = {f : L * jet(f, x, N-1) = 0}."""

    __slots__ = ("point", "jet_order", "conditions")

    def __init__(self, point: PointQ, jet_order: int, conditions):
        rows, _ = rref([list(map(Fraction, row)) for row in conditions])
        # minimal N: drop trailing all-zero columns
        n = jet_order
        while n > 0 and all(row[n - 1] == 0 for row in rows):
            n -= 1
        self.point = point
        self.jet_order = n
        self.conditions = tuple(tuple(row[:n]) for row in rows)

    def n_conditions(self):
        return len(self.conditions)

    def is_trivial(self):
        return not self.conditions

    def __eq__(self, other):
        return (isinstance(other, PrimaryData) and self.point == other.point
                and self.jet_order == other.jet_order
                and self.conditions == other.conditions)

    def __hash__(self):
        return hash((self.point, self.jet_order, self.conditions))

    def __repr__(self):
        return "PrimaryData(%r, N=%d, %d conditions)" % (
            self.point, self.jet_order, len(self.conditions))


class PDSubspace:
    """A primary decomposable subspace: per-point data at distinct points."""

    def __init__(self, curve: CurveModel, data=()):
        by_point = {}
        for pd in data:
            if pd.point.curve != curve:
                raise ValueError("datum on the wrong curve")
            if pd.point in by_point:
                raise ValueError("duplicate support point")
            if not pd.is_trivial():
                by_point[pd.point] = pd
        self.curve = curve
        self.data = by_point

    @classmethod
    def whole_ring(cls, curve):
        return cls(curve, ())

    def __eq__(self, other):
        return (isinstance(other, PDSubspace) and self.curve == other.curve
                and self.data == other.data)

    def __hash__(self):
        return hash((self.curve, frozenset(self.data.values())))

    def __repr__(self):
        if not self.data:
            return "PDSubspace(O(X))"
        return "PDSubspace(%s)" % ", ".join(repr(pd)
                                            for pd in self.data.values())

    def contains(self, f: GPoly) -> bool:
        for pd in self.data.values():
            j = jet(f, pd.point, pd.jet_order - 1)
            for row in pd.conditions:
                if sum(c * v for c, v in zip(row, j)) != 0:
                    return False
        return True


def div_of(v: PDSubspace) -> Divisor:
    """Div(V) = -sum n_x [x] (the sign convention of Theorem 1.4)."""
    return Divisor(v.curve, {pd.point: -pd.n_conditions()
                             for pd in v.data.values()})


def codim(v: PDSubspace) -> int:
    return sum(pd.n_conditions() for pd in v.data.values())


def I_V_formula(v: PDSubspace) -> OIdeal:
    """The product of maximal-ideal powers prod m_x^{n_x}."""
    out = OIdeal.whole_ring(v.curve)
    for pd in v.data.values():
        out = out.product(maximal_ideal(pd.point).power(pd.n_conditions()))
    return out


def _uniformizer(point: PointQ) -> GPoly:
    """A function of valuation 1 at the point (the local parameter's lift)."""
    curve = point.curve
    if curve.is_elliptic and point.is_ramified():
        return GPoly.var_y(curve)
    return GPoly.var_x(curve) - GPoly.const(curve, point.x)


def _jet_probe_functions(point: PointQ, count):
    """Functions whose order-<count jets form a triangular basis."""
    t = _uniformizer(point)
    out = [GPoly.one(point.curve)]
    for _ in range(count - 1):
        out.append(out[-1] * t)
    return out


def subspace_to_ideal(v: PDSubspace) -> RightIdealD:
    """The Cannings-Holland map V -> M_V, certified by round trip."""
    curve = v.curve
    if not v.data:
        return RightIdealD.whole_ring(curve)
    c = codim(v)
    k = c + 1
    cap = 4 * (c + 1)
    while True:
        cand = _mv_candidate(v, k)
        if ideal_to_subspace(cand) == v:
            # regenerate from the reduced basis: same ideal, small gens
            return RightIdealD(curve, cand.rgb_ops())
        if k >= cap:
            raise OrderBoundExceededError(cand)
        k = min(2 * k, cap)


def _mv_candidate(v: PDSubspace, k: int) -> RightIdealD:
    """Operators of order <= k satisfying the jet conditions, plus J*D
    for J = prod m_x^{N_x} (which always lies in M_V)."""
    curve = v.curve
    big = OIdeal.whole_ring(curve)
    for pd in v.data.values():
        big = big.product(maximal_ideal(pd.point).power(pd.jet_order))
    # monomial basis of O(X)/J
    std = CIdeal(curve, list(big.generators)
                 + [GPoly.var_xi(curve)]).standard_monomials()
    basis = [GPoly(curve, {m: Fraction(1)}) for m in std]
    nb = len(basis)
    # unknowns: coordinates of c_j over the basis, j = 0..k
    rows = []
    for pd in v.data.values():
        n = pd.jet_order
        probes = _jet_probe_functions(pd.point, n + k)
        # jets of b * delta^j(f_u), linear in the unknowns
        cell = {}
        for u, f in enumerate(probes):
            df = f
            for j in range(k + 1):
                for m, b in enumerate(basis):
                    cell[(j, m, u)] = jet(b * df, pd.point, n - 1)
                df = df.delta()
        for row_l in pd.conditions:
            for u in range(len(probes)):
                row = []
                for j in range(k + 1):
                    for m in range(nb):
                        jj = cell[(j, m, u)]
                        row.append(sum(c * w for c, w in zip(row_l, jj)))
                rows.append(row)
    gens = [DOp.from_poly(g) for g in big.generators]
    for sol in nullspace(rows, ncols=(k + 1) * nb):
        coeffs = {}
        for j in range(k + 1):
            p = GPoly.zero(curve)
            for m in range(nb):
                c = sol[j * nb + m]
                if c:
                    p = p + basis[m].scale(c)
            if not p.is_zero():
                coeffs[j] = p
        if coeffs:
            gens.append(DOp(curve, coeffs))
    return RightIdealD(curve, gens)


def ideal_to_subspace(m: RightIdealD) -> PDSubspace:
    """The inverse map M -> M.O(X); M must be fat."""
    curve = m.curve
    cap_o = m.intersect_O()
    if cap_o is None:
        raise ValueError("ideal is not fat; apply fat_normalize first")
    # m_x^{v_x(M cap O)} <= (M.O)_x, so jets below that order suffice
    support = support_points(cap_o)
    data = []
    gens = m.generators
    for point, n in support.items():
        span = []
        for g in gens:
            probes = _jet_probe_functions(point, n + g.order())
            for f in probes:
                span.append(jet(g.apply(f), point, n - 1))
        conditions = nullspace(span, ncols=n)
        data.append(PrimaryData(point, n, conditions))
    return PDSubspace(curve, data)


def scale_subspace(v: PDSubspace, f: GPoly) -> PDSubspace:
    """The subspace f*V = {f*g : g in V}; f a nonzero ring element."""
    if f.is_zero():
        raise ValueError("scaling by zero")
    curve = v.curve
    zeros = support_points(OIdeal(curve, [f]))
    points = set(v.data) | set(zeros)
    data = []
    for point in points:
        val = zeros.get(point, 0)
        pd = v.data.get(point)
        n_old = pd.jet_order if pd is not None else 0
        n_new = n_old + val
        if n_new == 0:
            continue
        fj = jet(f, point, n_new - 1)
        # jet_{<n_new}(f*g) only sees jet_{<n_old}(g), which ranges over
        # the kernel of the old conditions
        old_kernel = nullspace([list(r) for r in pd.conditions]
                               if pd is not None else [], ncols=n_old)
        span = [series_mul(fj, list(w) + [Fraction(0)] * val, n_new)
                for w in old_kernel]
        data.append(PrimaryData(point, n_new, nullspace(span, ncols=n_new)))
    return PDSubspace(curve, data)
