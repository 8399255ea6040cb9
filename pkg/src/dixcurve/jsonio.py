"""JSON encodings for every value the CLI reads or writes.

Conventions: rationals are strings ("3/2"), curves are
{"model": "line"} or {"model": "elliptic", "a": "0", "b": "1"},
points are lists of coordinate strings, ideals are lists of polynomial
(or operator) strings, and divisor classes are "identity" or a point.
"""

from __future__ import annotations

from fractions import Fraction

from .curves import CurveModel, PointQ
from .divisors import Divisor, DivisorClass, OIdeal
from .dop import DOp, format_dop, parse_dop
from .groebner import CIdeal
from .picd import BimoduleDatum, CurveAut, DAut, NotAnAutomorphismError
from .poly import GPoly, format_poly, parse_poly
from .rightgb import RightIdealD
from .subspaces import PDSubspace, PrimaryData


class JsonFormatError(ValueError):
    pass


def _require(cond, message):
    if not cond:
        raise JsonFormatError(message)


# ---- rationals ----------------------------------------------------------

def fraction_to_json(q: Fraction) -> str:
    return str(Fraction(q))


def fraction_from_json(obj) -> Fraction:
    try:
        return Fraction(obj)
    except (ValueError, TypeError) as err:
        raise JsonFormatError("bad rational: %r" % (obj,)) from err


# ---- curves and points --------------------------------------------------

def curve_to_json(curve: CurveModel):
    if curve.kind == "line":
        return {"model": "line"}
    return {"model": "elliptic", "a": fraction_to_json(curve.a),
            "b": fraction_to_json(curve.b)}


def curve_from_json(obj) -> CurveModel:
    _require(isinstance(obj, dict) and "model" in obj,
             "curve must be an object with a \"model\" key")
    model = obj["model"]
    if model == "line":
        return CurveModel("line")
    _require(model == "elliptic", "unknown curve model: %r" % (model,))
    return CurveModel("elliptic", fraction_from_json(obj.get("a", "0")),
                      fraction_from_json(obj.get("b", "0")))


def point_to_json(p: PointQ):
    if p.curve.kind == "line":
        return [fraction_to_json(p.x)]
    return [fraction_to_json(p.x), fraction_to_json(p.y)]


def point_from_json(curve: CurveModel, obj) -> PointQ:
    _require(isinstance(obj, list) and len(obj) in (1, 2),
             "point must be a list of 1 or 2 coordinate strings")
    coords = [fraction_from_json(c) for c in obj]
    if curve.kind == "line":
        _require(len(coords) == 1, "line points have one coordinate")
        return PointQ(curve, coords[0])
    _require(len(coords) == 2, "elliptic points have two coordinates")
    return PointQ(curve, coords[0], coords[1])


def class_to_json(c: DivisorClass):
    return "identity" if c.point is None else point_to_json(c.point)


def class_from_json(curve: CurveModel, obj) -> DivisorClass:
    if obj == "identity":
        return DivisorClass(curve, None)
    return DivisorClass(curve, point_from_json(curve, obj))


def divisor_to_json(d: Divisor):
    entries = sorted(d.entries.items(),
                     key=lambda kv: (kv[0].x, kv[0].y or 0))
    return [{"point": point_to_json(p), "mult": m} for p, m in entries]


# ---- ideals -------------------------------------------------------------

def oideal_to_json(ideal: OIdeal):
    return [format_poly(g) for g in ideal.generators]


def oideal_from_json(curve: CurveModel, obj) -> OIdeal:
    _require(isinstance(obj, list) and obj,
             "ideal must be a nonempty list of polynomial strings")
    return OIdeal(curve, [parse_poly(s, curve, allow_xi=False) for s in obj])


def cideal_to_json(f: CIdeal):
    return [format_poly(g) for g in f.gb_polys() if not g.is_zero()]


def cideal_from_json(curve: CurveModel, obj) -> CIdeal:
    _require(isinstance(obj, list) and obj,
             "graded ideal must be a nonempty list of polynomial strings")
    return CIdeal(curve, [parse_poly(s, curve) for s in obj])


def dideal_to_json(m: RightIdealD):
    return [format_dop(g) for g in m.rgb_ops()]


def dideal_from_json(curve: CurveModel, obj) -> RightIdealD:
    _require(isinstance(obj, list) and obj,
             "right ideal must be a nonempty list of operator strings")
    return RightIdealD(curve, [parse_dop(s, curve) for s in obj])


# ---- subspaces ----------------------------------------------------------

def subspace_to_json(v: PDSubspace):
    points = []
    for pd in sorted(v.data.values(),
                     key=lambda pd: (pd.point.x, pd.point.y or 0)):
        points.append({
            "point": point_to_json(pd.point),
            "jet_order": pd.jet_order,
            "conditions": [[fraction_to_json(c) for c in row]
                           for row in pd.conditions],
        })
    return {"points": points}


def subspace_from_json(curve: CurveModel, obj) -> PDSubspace:
    _require(isinstance(obj, dict) and isinstance(obj.get("points"), list),
             "subspace must be {\"points\": [...]}")
    data = []
    for entry in obj["points"]:
        _require(isinstance(entry, dict), "subspace point must be an object")
        point = point_from_json(curve, entry.get("point"))
        jet_order = entry.get("jet_order")
        _require(isinstance(jet_order, int) and jet_order >= 0,
                 "jet_order must be a nonnegative integer")
        conditions = entry.get("conditions", [])
        _require(all(isinstance(row, list) and len(row) == jet_order
                     for row in conditions),
                 "each condition must list jet_order coefficients")
        rows = [[fraction_from_json(c) for c in row] for row in conditions]
        data.append(PrimaryData(point, jet_order, rows))
    return PDSubspace(curve, data)


# ---- Pic D data ---------------------------------------------------------

def sigma_to_json(sigma: CurveAut):
    if sigma.is_identity():
        return "id"
    if sigma.nu:
        return "nu"
    return {"alpha": fraction_to_json(sigma.alpha),
            "beta": fraction_to_json(sigma.beta)}


def sigma_from_json(curve: CurveModel, obj) -> CurveAut:
    if obj == "id":
        return CurveAut.identity(curve)
    if obj == "nu":
        return CurveAut.inversion(curve)
    _require(isinstance(obj, dict), "sigma must be \"id\", \"nu\", or "
             "{\"alpha\": ..., \"beta\": ...}")
    return CurveAut(curve, fraction_from_json(obj.get("alpha", "1")),
                    fraction_from_json(obj.get("beta", "0")))


def datum_to_json(p: BimoduleDatum):
    return {"ideal": oideal_to_json(p.ideal),
            "sigma": sigma_to_json(p.sigma)}


def datum_from_json(curve: CurveModel, obj) -> BimoduleDatum:
    _require(isinstance(obj, dict) and "ideal" in obj,
             "datum must be {\"ideal\": [...], \"sigma\": ...}")
    return BimoduleDatum(oideal_from_json(curve, obj["ideal"]),
                         sigma_from_json(curve, obj.get("sigma", "id")))


def daut_to_json(phi: DAut):
    """Images of x and d as operator strings."""
    x = DOp.from_poly(phi.sigma.apply(GPoly.var_x(phi.curve)))
    return {"x": format_dop(x), "d": format_dop(phi.image_of_d())}


def daut_from_json(curve: CurveModel, obj) -> DAut:
    _require(isinstance(obj, dict) and "d" in obj,
             "automorphism must be {\"x\": ..., \"d\": ...}")
    imgd = parse_dop(obj["d"], curve)
    _require(imgd.order() == 1, "image of d must have order 1")
    u = imgd.leading_coeff()
    _require(u.is_constant(), "image of d must be u*d + w with u constant")
    ucoef = u.coeff((0, 0, 0))
    w = imgd.coeffs.get(0, GPoly.zero(curve))
    imgx = parse_dop(obj.get("x", "x"), curve)
    _require(imgx.order() == 0, "image of x must lie in O(X)")
    fx = imgx.coeffs[0]
    if curve.kind == "line":
        # alpha*x + beta; u is then forced to 1/alpha
        beta = fx.coeff((0, 0, 0))
        alpha = fx.coeff((0, 1, 0))
        expected = GPoly.var_x(curve).scale(alpha) + GPoly.const(curve, beta)
        if fx != expected:
            raise NotAnAutomorphismError("image of x must be alpha*x + beta")
        sigma = CurveAut(curve, alpha, beta)
    else:
        _require(fx == GPoly.var_x(curve), "elliptic models fix x")
        # u = -1 is the inversion nu, u = 1 the identity (Lemma 3.4)
        sigma = CurveAut(curve, nu=(ucoef == -1))
    return DAut(sigma, ucoef, w)
