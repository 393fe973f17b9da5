"""Command-line front end.  Every command prints a canonical JSON report
(sorted keys, gradlex generator ordering) so runs can be diffed byte for
byte.  Exit codes: 2 parse error, 3 budget error, 1 selftest failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .gf import Field, FieldError, parse_field
from .mpoly import Poly, PolyError, format_poly
from .action import (
    ActionError,
    GroupElem,
    parse_group_elem,
    reduce_to_type,
)
from .invariant import generating_set, is_free, nstar_bounds
from .prodone import davenport_brute
from .homog import (
    FormSpec,
    HomogError,
    count_invariant_irreducible,
    graded_component,
    invariant_factors_of_binomial,
)
from .oracle import BudgetError, verify_generators


class ParseError(ValueError):
    pass


_LAMBDA_RE = re.compile(r"\bl(\d+)\b")


def _substitute_lambda(ctx: Field, text: str, order):
    """Replace lK tokens by the K-th power of the smallest element of the
    requested multiplicative order."""
    if order is None:
        return text
    lam = ctx.element_of_order(order)
    if lam is None:
        raise ParseError(f"no element of order {order} in F_{ctx.q}")
    return _LAMBDA_RE.sub(
        lambda m: ctx.format_elem(ctx.pow(lam, int(m.group(1)))), text
    )


def _field(args) -> Field:
    if not args.field:
        raise ParseError("--field is required")
    return parse_field(args.field)


def _element(ctx, args) -> GroupElem:
    if not args.element:
        raise ParseError("--element is required")
    text = _substitute_lambda(ctx, args.element, args.lambda_order)
    return parse_group_elem(ctx, text)


def _emit(report, pretty):
    if pretty:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(json.dumps(report, sort_keys=True, separators=(",", ":")))


def _fmt_polys(polys):
    return [format_poly(g) for g in polys]


# -- commands --------------------------------------------------------------


def cmd_reduce(args):
    ctx = _field(args)
    A = _element(ctx, args)
    info = reduce_to_type(A)
    return {
        "h": info.h,
        "t": info.t,
        "H": [ctx.format_elem(a) for a in info.H],
        "orders": list(info.orders),
        "conjugator": info.conjugator.format(),
        "reduced": info.reduced.format(),
        "perm": [i + 1 for i in info.perm],
    }


def cmd_generators(args):
    ctx = _field(args)
    A = _element(ctx, args)
    S = generating_set(A)
    bounds = nstar_bounds(A)
    free, _ = is_free(A)
    return {
        "type": {"h": S.h, "t": S.t},
        "H": [ctx.format_elem(a) for a in S.info.H],
        "mstar": _fmt_polys(S.mstar),
        "chain": _fmt_polys(S.chain),
        "vars": _fmt_polys(S.vars),
        "generators_original": _fmt_polys(S.original_frame()),
        "N": S.N,
        "ell": S.ell,
        "bound": bounds["bound"],
        "attained": bounds["attained"],
        "free": free,
    }


def cmd_free(args):
    ctx = _field(args)
    A = _element(ctx, args)
    free, witness = is_free(A)
    return {
        "free": free,
        "witness": _fmt_polys(witness) if free else list(witness),
    }


def cmd_bound(args):
    ctx = _field(args)
    A = _element(ctx, args)
    return nstar_bounds(A)


def cmd_davenport(args):
    if args.m is None:
        raise ParseError("--m is required")
    D, extremal = davenport_brute(args.m)
    reported = [s for s in extremal if s != (0,)]
    if not reported:
        reported = extremal
    return {
        "D": D,
        "extremal_count": len(reported),
        "extremal": [list(s) for s in reported],
    }


def _form_spec(args):
    ctx = _field(args)
    if args.a is None or args.b is None:
        raise ParseError("--a and --b are required")
    a = ctx.parse_elem(_substitute_lambda(ctx, args.a, args.lambda_order))
    b = ctx.parse_elem(_substitute_lambda(ctx, args.b, args.lambda_order))
    return ctx, FormSpec.create(ctx, a, b)


def cmd_homog(args):
    ctx, spec = _form_spec(args)
    if args.n is None:
        raise ParseError("--n is required")
    comp = graded_component(spec, args.n)
    basis = [
        format_poly(Poly(ctx, 2, {m: 1})) for m in comp.basis
    ]
    return {
        "nonzero": comp.nonzero,
        "d0": comp.d0,
        "s": comp.s,
        "size": comp.size,
        "basis": basis,
        "irreducible_count": (
            count_invariant_irreducible(spec, args.n) if args.n >= 2 else None
        ),
    }


def cmd_homog_factors(args):
    ctx, spec = _form_spec(args)
    if args.r is None:
        raise ParseError("--r is required")
    target = args.n if args.n is not None else spec.D
    forms = invariant_factors_of_binomial(spec, args.r, target)
    return {
        "r": args.r,
        "degree": target,
        "factors": _fmt_polys(forms),
    }


def cmd_verify(args):
    ctx = _field(args)
    A = _element(ctx, args)
    d = args.max_degree if args.max_degree is not None else 4
    S = generating_set(A)
    ok, inv, alg = verify_generators(A, S, d)
    return {
        "ok": ok,
        "per_degree": [
            {"d": j, "inv_dim": iv, "alg_dim": av}
            for j, iv, av in zip(inv.degrees, inv.dims, alg.dims)
        ],
    }


def cmd_selftest(args):
    failures = []

    def check(name, got, want):
        if got != want:
            failures.append({"name": name, "got": got, "want": want})

    # order-8/order-4 pair over F_17: one mixed generator
    ctx = Field(17)
    A = parse_group_elem(ctx, "8,0;4,0")
    S = generating_set(A)
    check("mixed-pair mstar", sorted(_fmt_polys(S.mstar)), sorted(["x1^8", "x1^2*x2", "x2^4"]))
    check("mixed-pair N", S.N, 1)
    A2 = parse_group_elem(ctx, "13,0;9,0")
    S2 = generating_set(A2)
    check(
        "swapped-pair mstar",
        sorted(_fmt_polys(S2.mstar)),
        sorted(["x1^4", "x1*x2^6", "x1^2*x2^4", "x1^3*x2^2", "x2^8"]),
    )
    check("swapped-pair N", S2.N, 3)

    # sign flips plus translations in five variables over F_3
    ctx3 = Field(3)
    A5 = parse_group_elem(ctx3, "2,0;2,0;1,1;1,1;1,0")
    S5 = generating_set(A5)
    check(
        "five-var generators",
        sorted(_fmt_polys(S5.original_frame())),
        sorted(["x1^2", "x2^2", "x1*x2", "x3 + 2*x4", "x4^3 + 2*x4", "x5"]),
    )

    # Davenport constants of small cyclic groups
    for m in range(1, 7):
        D, _ = davenport_brute(m)
        check(f"davenport {m}", D, m)

    # irreducible fixed forms of degree 2 under (x, y) -> (4x, y) over F_5
    ctx5 = Field(5)
    spec = FormSpec.create(ctx5, 4, 1)
    check("irreducible count", count_invariant_irreducible(spec, 2), 8)

    # q = 2 elements are always free
    ctx2 = Field(2)
    free, _ = is_free(parse_group_elem(ctx2, "1,1"))
    check("q=2 free", free, True)

    return {"ok": not failures, "failures": failures}


COMMANDS = {
    "reduce": cmd_reduce,
    "generators": cmd_generators,
    "free": cmd_free,
    "bound": cmd_bound,
    "davenport": cmd_davenport,
    "homog": cmd_homog,
    "homog-factors": cmd_homog_factors,
    "verify": cmd_verify,
    "selftest": cmd_selftest,
}


def build_parser():
    ap = argparse.ArgumentParser(
        prog="ffinv",
        description="Invariants of affine coordinate actions on F_q[x1..xn]",
    )
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("--field", help='field spec "p" or "p^k"')
    ap.add_argument("--element", help='group element "a,b;a,b;..."')
    ap.add_argument("--matrix", help="2x2 matrix a1,a2;a3,a4")
    ap.add_argument("--m", type=int, help="cyclic group order for davenport")
    ap.add_argument("--a", help="first diagonal entry for homog commands")
    ap.add_argument("--b", help="second diagonal entry for homog commands")
    ap.add_argument("--n", type=int, help="degree for homog commands")
    ap.add_argument("--r", type=int, help="exponent for homog-factors")
    ap.add_argument("--max-degree", type=int, help="degree bound for verify")
    ap.add_argument(
        "--lambda-order",
        type=int,
        help="define lK tokens as powers of the smallest element of this order",
    )
    ap.add_argument("--pretty", action="store_true", help="indent the JSON output")
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        report = COMMANDS[args.command](args)
    except BudgetError as e:
        print(f"budget error: {e}", file=sys.stderr)
        return 3
    except (ParseError, FieldError, PolyError, ActionError, HomogError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    _emit(report, args.pretty)
    if args.command == "selftest" and not report["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
