"""Command-line front end.

Every verb prints one JSON document (sorted keys) on stdout.  Exit codes:
0 when everything verified, 1 when a verification failed (the report is still
printed), 2 for invalid input (a JSON ``{"error": ...}`` object is printed).
"""

from __future__ import annotations

import argparse
import ast
import json
import sys
from fractions import Fraction

from . import catalog, graded, hypergeom, rrc, triangle
from .brackets import rc_bracket
from .coeff import QuadExt
from .series import PuiseuxSeries

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    """Invalid command-line input."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _json_default(x):
    if isinstance(x, (Fraction, QuadExt)):
        return str(x)
    raise TypeError(f"not serializable: {type(x).__name__}")


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=True, default=_json_default) + "\n")


def _signature(args) -> triangle.TriangleSignature:
    try:
        return triangle.TriangleSignature(args.n, args.m, args.k, args.r)
    except ValueError as exc:
        raise InputError(str(exc)) from None


# -- bracket operand expressions ---------------------------------------------

class _FormEval(ast.NodeVisitor):
    """Evaluate polynomial expressions over catalog names to ``(series, weight)``."""

    def __init__(self, order):
        self.order = order

    def generic_visit(self, node):
        raise InputError(f"unsupported syntax in expression: {type(node).__name__}")

    def visit_Expression(self, node):
        return self.visit(node.body)

    def visit_Constant(self, node):
        if isinstance(node.value, int) and not isinstance(node.value, bool):
            return Fraction(node.value), None
        raise InputError(f"unsupported literal {node.value!r}")

    def visit_Name(self, node):
        try:
            form = catalog.lookup(node.id, self.order)
        except KeyError:
            raise InputError(f"unknown form {node.id!r}; known: "
                             + ", ".join(catalog.CATALOG_NAMES)) from None
        if form.nome != 1:
            raise InputError("bracket operands must share the standard nome")
        return form.series, form.weight

    def visit_Call(self, node):
        if isinstance(node.func, ast.Name) and node.func.id == "sqrt" and len(node.args) == 1:
            d, w = self.visit(node.args[0])
            if w is not None or not isinstance(d, Fraction) or d.denominator != 1:
                raise InputError("sqrt needs an integer literal")
            try:
                return QuadExt(0, 1, int(d)), None
            except ValueError as exc:
                raise InputError(str(exc)) from None
        raise InputError("only sqrt(d) calls are allowed")

    def visit_UnaryOp(self, node):
        v, w = self.visit(node.operand)
        if isinstance(node.op, ast.USub):
            return -v, w
        if isinstance(node.op, ast.UAdd):
            return v, w
        raise InputError("unsupported unary operator")

    def visit_BinOp(self, node):
        (a, wa), (b, wb) = self.visit(node.left), self.visit(node.right)
        if isinstance(node.op, (ast.Add, ast.Sub)):
            if wa != wb:
                raise InputError("sum of terms of different weight")
            return (a + b if isinstance(node.op, ast.Add) else a - b), wa
        if isinstance(node.op, ast.Mult):
            w = None if wa is None and wb is None else (wa or 0) + (wb or 0)
            return a * b, w
        if isinstance(node.op, ast.Div):
            if wb is not None:
                raise InputError("division only by scalars")
            return a / b, wa
        if isinstance(node.op, ast.Pow):
            if wb is not None or not isinstance(b, Fraction) or b.denominator != 1 or b < 0:
                raise InputError("exponents must be non-negative integers")
            return a ** int(b), None if wa is None else wa * int(b)
        raise InputError("unsupported operator")


def _form_expr(text: str, order: int):
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError:
        raise InputError(f"cannot parse expression {text!r}") from None
    value, weight = _FormEval(order).visit(tree)
    if not isinstance(value, PuiseuxSeries):
        value, weight = PuiseuxSeries.coerce(value).truncate(order), Fraction(0)
    return value, Fraction(weight or 0)


# -- verbs ----------------------------------------------------------------------

def cmd_solve(args):
    sig = _signature(args)
    if args.coord == "q":
        if (sig.k, sig.r) != (1, 1):
            raise InputError("the q-coordinate solution needs k = r = 1")
        sol = rrc.solve_q(sig.n, sig.m, args.order)
    else:
        sol = rrc.solve_z(sig, args.order)
    return sol.to_dict(), True


def cmd_verify(args):
    what = args.what
    if what == "ramanujan":
        report = catalog.verify_ramanujan(args.order)
    elif what == "d33":
        report = catalog.verify_33(args.order)
    else:
        if args.n is None or args.m is None:
            raise InputError(f"verify {what} needs --n and --m")
        sig = _signature(args)
        if what == "triangle":
            report = rrc.verify_system(rrc.solve_z(sig, args.order))
        elif what == "inversion":
            report = rrc.verify_inversion(sig, args.order)
        else:
            report = rrc.ohyama_roundtrip(sig, args.order)
    return report, report["ok"]


def cmd_bracket(args):
    f, k = _form_expr(args.f, args.order)
    g, l = _form_expr(args.g, args.order)
    value = rc_bracket(f, k, g, l, args.n, PuiseuxSeries.theta)
    return {"n": args.n, "weight": str(k + l + 2 * args.n), "series": value.to_dict()}, True


def cmd_dims(args):
    sig = _signature(args)
    table = triangle.dims_table(sig, args.wmax)
    ok = all(row["dim"] == len(row["basis"]) for row in table)
    return {"signature": sig.to_dict(), "table": table}, ok


def cmd_hypergeom(args):
    p = hypergeom.HGParams(args.alpha, args.beta, args.gamma)
    try:
        F = hypergeom.hg_series(p, args.order)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out = {"alpha": str(p.alpha), "beta": str(p.beta), "gamma": str(p.gamma),
           "F": F.to_dict()}
    if p.gamma == 1:
        sol = hypergeom.frobenius_pair(p, args.order)
        out["h"] = sol.h.to_dict()
        out["nome"] = hypergeom.nome(sol).to_dict()
    return out, True


def cmd_sl2check(args):
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
    try:
        spec, D = graded.parse_system(text)
    except graded.ParseError as exc:
        raise InputError(str(exc)) from None
    out = {"generators": list(spec.names)}
    if spec.rank == 2:
        try:
            report = graded.bigraded_serre_check(D)
        except (KeyError, ValueError) as exc:
            raise InputError(f"bi-graded check needs generators P1, P2, B, Q2: {exc}") from None
        out.update(bigraded=report, ok=report["ok"])
        return out, report["ok"]
    t1 = args.t1 or spec.names[0]
    if t1 not in spec.names:
        raise InputError(f"unknown generator {t1!r}")
    try:
        graded.rrc_shape_check(D, t1)
        out["shape"] = {"ok": True}
    except graded.ShapeViolation as exc:
        out["shape"] = {"ok": False, "generator": exc.generator, "reason": exc.reason,
                        "term": exc.term}
    try:
        delta = graded.lowering_operator(spec, t1)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = graded.sl2_check(D, graded.weight_operator(spec), delta)
    out["sl2"] = report.to_dict()
    ok = out["shape"]["ok"] and report.ok
    out["ok"] = ok
    return out, ok


def cmd_inversion(args):
    report = rrc.verify_inversion(_signature(args), args.order)
    return report, report["ok"]


def cmd_catalog(args):
    try:
        form = catalog.lookup(args.name, args.order)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    return form.to_dict(), True


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rrcsys", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def sig_args(p, required=True):
        p.add_argument("--n", type=_positive, required=required)
        p.add_argument("--m", type=_positive, required=required)
        p.add_argument("--k", type=_positive, default=1)
        p.add_argument("--r", type=_positive, default=1)

    p = sub.add_parser("solve", help="series solution of a triangle system")
    sig_args(p)
    p.add_argument("--order", type=_positive, default=20)
    p.add_argument("--coord", choices=("q", "z"), default="z")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="run a verification bundle")
    p.add_argument("what", choices=("ramanujan", "triangle", "d33", "inversion", "ohyama"))
    sig_args(p, required=False)
    p.add_argument("--order", type=_positive, default=40)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bracket", help="Rankin-Cohen bracket of catalog expressions")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--order", type=_positive, default=20)
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("dims", help="dimension table of pure weights")
    sig_args(p)
    p.add_argument("--wmax", type=_rational, required=True)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("hypergeom", help="hypergeometric series and Frobenius data")
    p.add_argument("--alpha", type=_rational, required=True)
    p.add_argument("--beta", type=_rational, required=True)
    p.add_argument("--gamma", type=_rational, default=Fraction(1))
    p.add_argument("--order", type=_positive, default=20)
    p.set_defaults(func=cmd_hypergeom)

    p = sub.add_parser("sl2check", help="RRC shape and sl2 relations of a system file "
                       "(bi-graded Serre shape for two-component weights)")
    p.add_argument("--file", required=True)
    p.add_argument("--t1", default=None)
    p.set_defaults(func=cmd_sl2check)

    p = sub.add_parser("inversion", help="inversion identities for one signature")
    sig_args(p)
    p.add_argument("--order", type=_positive, default=40)
    p.set_defaults(func=cmd_inversion)

    p = sub.add_parser("catalog", help="dump a catalog form")
    p.add_argument("--name", required=True)
    p.add_argument("--order", type=_positive, default=20)
    p.set_defaults(func=cmd_catalog)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result, ok = args.func(args)
    except InputError as exc:
        _emit({"error": str(exc), "type": "invalid_input"}, out)
        err.write(f"rrcsys: {exc}\n")
        return EXIT_INPUT
    _emit(result, out)
    return EXIT_OK if ok else EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
