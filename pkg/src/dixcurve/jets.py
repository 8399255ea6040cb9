"""Truncated power series at rational points: jets, valuations, and the
action of the canonical derivation on jets.

The local parameter is t = x - x_P on the line and at elliptic points with
y_P != 0; at elliptic ramification points (y_P = 0) it is t = y.
"""

from __future__ import annotations

from fractions import Fraction

from .curves import CurveModel, PointQ
from .poly import GPoly


class ValuationOverflowError(ArithmeticError):
    def __init__(self, cutoff):
        super().__init__("valuation overflow: jet vanishes to order %d" % cutoff)
        self.cutoff = cutoff


def series_mul(a, b, n):
    """Product of coefficient lists, truncated to length n."""
    out = [Fraction(0)] * n
    for i, ai in enumerate(a):
        if ai == 0 or i >= n:
            continue
        for j, bj in enumerate(b):
            if i + j >= n:
                break
            out[i + j] += ai * bj
    return out


def series_pow(a, e, n):
    out = [Fraction(0)] * n
    if n:
        out[0] = Fraction(1)
    for _ in range(e):
        out = series_mul(out, a, n)
    return out


def _series_xy(point: PointQ, n):
    """Series of the coordinate functions x and y in the local parameter."""
    curve = point.curve
    if curve.kind == "line":
        xs = [Fraction(0)] * n
        if n > 0:
            xs[0] = point.x
        if n > 1:
            xs[1] = Fraction(1)
        return xs, None
    if not point.is_ramified():
        # t = x - x_P; solve y(t)^2 = f(x_P + t) with y(0) = y_P != 0
        xs = [Fraction(0)] * n
        if n > 0:
            xs[0] = point.x
        if n > 1:
            xs[1] = Fraction(1)
        fs = [curve.rhs(point.x), curve.rhs_deriv(point.x),
              3 * point.x, Fraction(1)]
        ys = [Fraction(0)] * n
        if n > 0:
            ys[0] = point.y
        for k in range(1, n):
            conv = sum(ys[i] * ys[k - i] for i in range(1, k))
            fk = fs[k] if k < 4 else Fraction(0)
            ys[k] = (fk - conv) / (2 * point.y)
        return xs, ys
    # ramification point: t = y; solve f(x(t)) = t^2 with x(0) = x_P
    ys = [Fraction(0)] * n
    if n > 1:
        ys[1] = Fraction(1)
    fp = curve.rhs_deriv(point.x)  # nonzero by smoothness
    xs = [Fraction(0)] * n
    if n > 0:
        xs[0] = point.x
    # f(x_P + u) = fp*u + 3*x_P*u^2 + u^3 where u = xs - x_P
    u = [Fraction(0)] * n
    for k in range(1, n):
        # u[0] = 0, so (u^2)[k] and (u^3)[k] only involve u[i] with i < k
        u2 = series_mul(u, u, k + 1)
        u3 = series_mul(u2, u, k + 1)
        known = Fraction(0)
        if k < len(u2):
            known += 3 * point.x * u2[k]
        if k < len(u3):
            known += u3[k]
        target = Fraction(1) if k == 2 else Fraction(0)
        u_k = (target - known) / fp
        u[k] = u_k
        xs[k] = u_k
    return xs, ys


def jet(f: GPoly, point: PointQ, k: int):
    """Coefficients of t^0..t^k of f in the local parameter at the point."""
    if not f.is_ring_element():
        raise ValueError("jets are defined for elements of O(X)")
    if f.curve != point.curve:
        raise ValueError("point is not on the polynomial's curve")
    n = k + 1
    xs, ys = _series_xy(point, n)
    out = [Fraction(0)] * n
    xpows = {0: [Fraction(1)] + [Fraction(0)] * (n - 1)}

    def xpow(e):
        if e not in xpows:
            xpows[e] = series_mul(xpow(e - 1), xs, n)
        return xpows[e]

    for (ke, xe, ye), c in f.terms.items():
        s = xpow(xe)
        if ye:
            s = series_mul(s, ys, n)
        for i in range(n):
            out[i] += c * s[i]
    return out


def delta_series_factor(point: PointQ, n):
    """Series u with delta acting on jets as u(t) * d/dt."""
    curve = point.curve
    if curve.kind == "line":
        u = [Fraction(0)] * n
        if n > 0:
            u[0] = Fraction(1)
        return u
    xs, ys = _series_xy(point, n)
    if not point.is_ramified():
        # delta(t) = delta(x) = 2y
        return [2 * c for c in ys]
    # delta(t) = delta(y) = 3x^2 + a
    x2 = series_mul(xs, xs, n)
    return [3 * c + (curve.a if i == 0 else 0) for i, c in enumerate(x2)]


def series_delta(s, point: PointQ):
    """Apply the canonical derivation to a jet; output is one order shorter."""
    n = len(s) - 1
    if n < 0:
        return []
    ds = [s[i + 1] * (i + 1) for i in range(n)]
    u = delta_series_factor(point, n)
    return series_mul(u, ds, n)


def valuation_of_elem(f: GPoly, point: PointQ, cutoff=None):
    """Order of vanishing of a nonzero ring element at a rational point."""
    if f.is_zero():
        raise ValueError("valuation of zero")
    if cutoff is None:
        cutoff = 2 * f.total_degree() + 6
    j = jet(f, point, cutoff)
    for i, c in enumerate(j):
        if c != 0:
            return i
    raise ValuationOverflowError(cutoff)
