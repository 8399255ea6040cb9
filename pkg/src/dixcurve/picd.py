"""The semidirect product Pic X x| Aut O(X), bimodule data (I, sigma),
and the induced actions: on Pic X (via J.P = sigma^{-1}(J I)), on graded
ideals (F.(I,sigma) = sigma_hat^{-1}(F I)), and on right D-ideals via
automorphism lifts Phi of D.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curves import CurveModel, PointQ
from .divisors import (DivisorClass, OIdeal, class_of_ideal,
                       class_representative_ideal, pic_identity)
from .dop import DOp
from .groebner import CIdeal
from .poly import GPoly
from .rightgb import RightIdealD


class NotAnAutomorphismError(ValueError):
    pass


@dataclass(frozen=True)
class CurveAut:
    """Supported automorphisms of O(X): x -> alpha x + beta on the line;
    identity or the inversion nu: (x, y) -> (x, -y) on elliptic models."""

    curve: CurveModel
    alpha: Fraction = Fraction(1)   # line only
    beta: Fraction = Fraction(0)    # line only
    nu: bool = False                # elliptic only

    def __post_init__(self):
        if self.curve.kind == "line":
            if self.alpha == 0:
                raise NotAnAutomorphismError("alpha must be nonzero")
            if self.nu:
                raise NotAnAutomorphismError("nu only exists on elliptic curves")
        else:
            if self.alpha != 1 or self.beta != 0:
                raise NotAnAutomorphismError(
                    "elliptic models only support identity and nu")

    @classmethod
    def identity(cls, curve):
        return cls(curve)

    @classmethod
    def inversion(cls, curve):
        return cls(curve, nu=True)

    def is_identity(self):
        return self.alpha == 1 and self.beta == 0 and not self.nu

    # xi scales by this factor under the lift sigma_hat (Lemma 3.4)
    def xi_factor(self) -> Fraction:
        if self.curve.kind == "line":
            return Fraction(1) / self.alpha
        return Fraction(-1) if self.nu else Fraction(1)

    def apply(self, f: GPoly) -> GPoly:
        """Apply the lift sigma_hat to an element of Obar (ring elements
        are just transformed by sigma)."""
        curve = self.curve
        if curve.kind == "line":
            sx = GPoly.var_x(curve).scale(self.alpha) \
                + GPoly.const(curve, self.beta)
            out = GPoly.zero(curve)
            xi = GPoly.var_xi(curve)
            c = self.xi_factor()
            for (ke, xe, ye), coef in f.terms.items():
                out = out + (sx ** xe) * (xi ** ke) \
                    .scale(c ** ke).scale(coef)
            return out
        # elliptic: y -> -y, xi -> -xi when nu
        if not self.nu:
            return f
        return GPoly(curve, {m: c * (-1) ** (m[0] + m[2])
                             for m, c in f.terms.items()})

    def apply_ideal(self, ideal: OIdeal) -> OIdeal:
        return OIdeal(self.curve, [self.apply(g) for g in ideal.generators])

    def apply_cideal(self, f: CIdeal) -> CIdeal:
        return CIdeal(self.curve, [self.apply(g) for g in f.generators])

    def apply_point(self, p: PointQ) -> PointQ:
        """The point with sigma(m_p') = m_p ... i.e. the image of p under
        the variety map dual to sigma."""
        if self.curve.kind == "line":
            # sigma(x - c) = alpha x + beta - c vanishes at (c - beta)/alpha
            return PointQ(self.curve, (p.x - self.beta) / self.alpha)
        return p.negate() if self.nu else p

    def compose(self, other: "CurveAut") -> "CurveAut":
        """The automorphism with apply = self.apply o other.apply."""
        if self.curve != other.curve:
            raise ValueError("automorphisms on different curves")
        if self.curve.kind == "line":
            # g(a'x+b') then x -> ax+b gives g(a'(ax+b)+b')
            return CurveAut(self.curve, other.alpha * self.alpha,
                            other.alpha * self.beta + other.beta)
        return CurveAut(self.curve, nu=self.nu != other.nu)

    def inverse(self) -> "CurveAut":
        if self.curve.kind == "line":
            return CurveAut(self.curve, Fraction(1) / self.alpha,
                            -self.beta / self.alpha)
        return self


@dataclass(frozen=True)
class BimoduleDatum:
    """The (I, sigma) image of an invertible bimodule (DI)_phi."""

    ideal: OIdeal
    sigma: CurveAut

    def __post_init__(self):
        if self.ideal.curve != self.sigma.curve:
            raise ValueError("ideal and automorphism on different curves")

    @property
    def curve(self):
        return self.ideal.curve

    @classmethod
    def neutral(cls, curve):
        return cls(OIdeal.whole_ring(curve), CurveAut.identity(curve))


def sd_mul(p: BimoduleDatum, q: BimoduleDatum) -> BimoduleDatum:
    """(I, sigma)(J, tau) = (I sigma(J), sigma tau)."""
    if p.curve != q.curve:
        raise ValueError("data on different curves")
    return BimoduleDatum(p.ideal.product(p.sigma.apply_ideal(q.ideal)),
                         p.sigma.compose(q.sigma))


def act_pic(p: BimoduleDatum, c: DivisorClass) -> DivisorClass:
    """J.P = sigma^{-1}(J I), reduced through class_of_ideal."""
    j = class_representative_ideal(c)
    return class_of_ideal(p.sigma.inverse().apply_ideal(
        j.product(p.ideal)))


def lift_sigma(sigma: CurveAut):
    """sigma_hat on Obar, as a function on GPoly."""
    return sigma.apply


def act_graded(p: BimoduleDatum, f: CIdeal) -> CIdeal:
    """F.(I, sigma) = sigma_hat^{-1}(F I)."""
    prod = f.product(p.ideal.extend())
    return p.sigma.inverse().apply_cideal(prod)


@dataclass(frozen=True)
class DAut:
    """An automorphism Phi of D over a supported sigma: Phi acts as sigma
    on O(X) and sends d to u*d + w; u is forced by sigma, w is free."""

    sigma: CurveAut
    u: Fraction
    w: GPoly

    def __post_init__(self):
        curve = self.sigma.curve
        if self.w.curve != curve or not self.w.is_ring_element():
            raise NotAnAutomorphismError("w must lie in O(X)")
        if self.u != self.sigma.xi_factor():
            # the relation [Phi(d), sigma(f)] = sigma(delta f) forces u
            raise NotAnAutomorphismError("not an automorphism")

    @property
    def curve(self):
        return self.sigma.curve

    @classmethod
    def identity(cls, curve):
        return cls(CurveAut.identity(curve), Fraction(1), GPoly.zero(curve))

    @classmethod
    def from_sigma(cls, sigma: CurveAut, w=None):
        if w is None:
            w = GPoly.zero(sigma.curve)
        return cls(sigma, sigma.xi_factor(), w)

    def image_of_d(self) -> DOp:
        return DOp(self.curve, {1: GPoly.const(self.curve, self.u),
                                0: self.w})

    def apply(self, op: DOp) -> DOp:
        out = DOp.zero(self.curve)
        phid = self.image_of_d()
        pw = DOp.one(self.curve)
        top = op.order()
        for j in range(top + 1):
            c = op.coeffs.get(j)
            if c is not None:
                out = out + pw.lmul_poly(self.sigma.apply(c))
            pw = pw * phid
        return out

    def inverse(self) -> "DAut":
        sinv = self.sigma.inverse()
        u2 = Fraction(1) / self.u
        w2 = sinv.apply(self.w.scale(-u2))
        return DAut(sinv, u2, w2)


def act_dideal(phi: DAut, ideal: OIdeal, m: RightIdealD) -> RightIdealD:
    """Phi^{-1}(M I): the right ideal isomorphic to M tensor (DI)_phi."""
    if phi.curve != m.curve or ideal.curve != m.curve:
        raise ValueError("mismatched curves")
    inv = phi.inverse()
    gens = []
    # left multiplication: h*(sum g_j d_j) = sum (h g_j) d_j, so the result
    # does not depend on the chosen generating set of M
    for g in m.generators:
        for h in ideal.generators:
            gens.append(inv.apply(DOp.from_poly(h) * g))
    return RightIdealD(m.curve, gens, m.pair_budget)


def pic_preimage(c: DivisorClass) -> BimoduleDatum:
    """A datum (I, id) with act_pic((I, id), identity) = c."""
    return BimoduleDatum(class_representative_ideal(c),
                         CurveAut.identity(c.curve))
