"""The `dixcurve` command line tool.

Subcommands:
  validate      check that a curve model is smooth
  gamma         class of a right D-ideal (operator strings)
  n             invariant n(M) of a right D-ideal
  gr            associated graded ideal of a right D-ideal
  hilb          Hilbert-scheme point and n of a graded ideal (xi allowed)
  div           Div(V) and its class for a subspace
  to-ideal      Cannings-Holland map V -> M_V
  to-subspace   inverse map M -> M.O(X)
  act           apply a bimodule datum to a class, graded ideal, or D-ideal
  verify        run the theorem battery (all, or one theorem id)

Inputs: --curve and --in accept inline JSON or a path to a JSON file;
--out writes the result JSON (default stdout).  The exit code of
`verify` is the number of failed reports, capped at 120.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .classify import gamma, hilb_point, n_invariant, n_of_graded
from .curves import validate as validate_curve
from .divisors import class_of_divisor
from .picd import DAut, act_dideal, act_graded, act_pic
from .poly import GPoly, parse_poly
from .subspaces import div_of, ideal_to_subspace, subspace_to_ideal
from .verify import verify_battery


def _load_json(text):
    """Inline JSON if it looks like JSON, else a file path."""
    if text is None:
        return None
    stripped = text.strip()
    if stripped[:1] in "{[\"" or stripped in ("null", "true", "false") \
            or stripped[:1].isdigit() or stripped[:1] == "-":
        return json.loads(stripped)
    with open(text, encoding="utf-8") as fh:
        return json.load(fh)


def _emit(obj, out_path):
    text = json.dumps(obj, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _curve(args):
    obj = _load_json(args.curve) if args.curve else {"model": "line"}
    return jsonio.curve_from_json(obj)


def _input(args):
    if args.infile is None:
        raise SystemExit("error: this subcommand requires --in")
    return _load_json(args.infile)


# ---- subcommand bodies --------------------------------------------------

def cmd_validate(args):
    curve = _curve(args)
    validate_curve(curve)
    _emit({"ok": True, "curve": jsonio.curve_to_json(curve)}, args.out)
    return 0


def cmd_gamma(args):
    curve = _curve(args)
    m = jsonio.dideal_from_json(curve, _input(args))
    _emit({"class": jsonio.class_to_json(gamma(m))}, args.out)
    return 0


def cmd_n(args):
    curve = _curve(args)
    m = jsonio.dideal_from_json(curve, _input(args))
    _emit({"n": n_invariant(m)}, args.out)
    return 0


def cmd_gr(args):
    curve = _curve(args)
    m = jsonio.dideal_from_json(curve, _input(args))
    _emit({"gr": jsonio.cideal_to_json(m.fat_normalize().gr_ideal())},
          args.out)
    return 0


def cmd_hilb(args):
    curve = _curve(args)
    f = jsonio.cideal_from_json(curve, _input(args))
    h = hilb_point(f)
    _emit({"I": jsonio.cideal_to_json(h), "n": n_of_graded(f)}, args.out)
    return 0


def cmd_div(args):
    curve = _curve(args)
    v = jsonio.subspace_from_json(curve, _input(args))
    d = div_of(v)
    _emit({"div": jsonio.divisor_to_json(d),
           "class": jsonio.class_to_json(class_of_divisor(d))}, args.out)
    return 0


def cmd_to_ideal(args):
    curve = _curve(args)
    v = jsonio.subspace_from_json(curve, _input(args))
    _emit({"ideal": jsonio.dideal_to_json(subspace_to_ideal(v))}, args.out)
    return 0


def cmd_to_subspace(args):
    curve = _curve(args)
    m = jsonio.dideal_from_json(curve, _input(args))
    v = ideal_to_subspace(m.fat_normalize())
    _emit(jsonio.subspace_to_json(v), args.out)
    return 0


def cmd_act(args):
    """Input: {"datum": {...}, "on": {"class"|"graded"|"dideal": ..., "w": ...}}.

    The optional "w" string extends the datum's sigma to the D-automorphism
    d -> u*d + w used for the action on right D-ideals.
    """
    curve = _curve(args)
    obj = _input(args)
    if not isinstance(obj, dict) or "datum" not in obj or "on" not in obj:
        raise jsonio.JsonFormatError(
            "act input must be {\"datum\": ..., \"on\": ...}")
    datum = jsonio.datum_from_json(curve, obj["datum"])
    target = obj["on"]
    if "class" in target:
        c = jsonio.class_from_json(curve, target["class"])
        _emit({"class": jsonio.class_to_json(act_pic(datum, c))}, args.out)
    elif "graded" in target:
        f = jsonio.cideal_from_json(curve, target["graded"])
        _emit({"graded": jsonio.cideal_to_json(act_graded(datum, f))},
              args.out)
    elif "dideal" in target:
        m = jsonio.dideal_from_json(curve, target["dideal"])
        w = parse_poly(target.get("w", "0"), curve, allow_xi=False) \
            if "w" in target else GPoly.zero(curve)
        phi = DAut.from_sigma(datum.sigma, w)
        _emit({"dideal": jsonio.dideal_to_json(
            act_dideal(phi, datum.ideal, m))}, args.out)
    else:
        raise jsonio.JsonFormatError(
            "\"on\" must contain \"class\", \"graded\", or \"dideal\"")
    return 0


def cmd_verify(args):
    curve = _curve(args)
    reports = verify_battery(curve, seed=args.seed, count=args.count)
    if args.theorem != "all":
        reports = [r for r in reports if r.theorem == args.theorem]
    failed = sum(1 for r in reports if not r.passed)
    _emit({"reports": [r.to_json() for r in reports],
           "failed": failed}, args.out)
    return min(failed, 120)


# ---- argument parsing ---------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="dixcurve",
        description="Exact computations with ideals of differential "
                    "operators on the line and on elliptic curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, needs_in=True):
        p = sub.add_parser(name)
        p.add_argument("--curve", help="curve JSON (inline or a file path); "
                       "default is the line")
        if needs_in:
            p.add_argument("--in", dest="infile",
                           help="input JSON (inline or a file path)")
        p.add_argument("--out", help="write output JSON to this file")
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate, needs_in=False)
    add("gamma", cmd_gamma)
    add("n", cmd_n)
    add("gr", cmd_gr)
    add("hilb", cmd_hilb)
    add("div", cmd_div)
    add("to-ideal", cmd_to_ideal)
    add("to-subspace", cmd_to_subspace)
    add("act", cmd_act)

    v = add("verify", cmd_verify, needs_in=False)
    v.add_argument("theorem", nargs="?", default="all",
                   help="a theorem id such as theorem-1.2, or \"all\"")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=8,
                   help="battery instances per curve (default 8)")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError, json.JSONDecodeError) as err:
        sys.stderr.write("error: %s\n" % (err,))
        return 121


if __name__ == "__main__":
    sys.exit(main())
