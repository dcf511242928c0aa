"""Command-line front end: evaluate, differentiate, tabulate and cross-check expressions."""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from . import dual as D
from .autodiff import fd_central
from .dual import Dual
from .errors import DomainError, EvaluationError, ParseError
from .expr import eval_dual, free_variables, parse_expression

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DOMAIN = 2
EXIT_USAGE = 3
EXIT_CHECK = 4

MAX_ROWS = 1_000_000

_EVAL_ERRORS = (DomainError, EvaluationError, OverflowError, ZeroDivisionError)

EPILOG = """\
expression syntax (highest precedence first):
  f(a), f(a, b)   function call
  ^               power, right-associative: 2^3^2 = 2^(3^2)
  - (unary)       negation, binds looser than ^: -x^2 = -(x^2)
  * /             left-associative
  + -             left-associative

functions: sin cos tan cot asin acos atan acot sinh cosh tanh coth
           exp log sqrt cbrt abs conj; log(b, x) is the base-b logarithm
constants: pi e
exponents must be real-valued; x^x cannot be differentiated

exit codes: 0 ok, 1 parse error, 2 domain error, 3 usage error,
            4 check tolerance exceeded
"""


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="dualnum",
        description="Evaluate math expressions over dual numbers and compute exact first derivatives.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", metavar="{eval,diff,table,check}")
    sub.required = True

    def common(p, formats=("text", "json")):
        p.add_argument("--expr", required=True, help="expression in one variable")
        p.add_argument("--digits", type=int, default=12, help="significant digits, 4..17 (default 12)")
        p.add_argument("--format", choices=formats, default="text")

    kw = dict(epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    p = sub.add_parser("eval", help="evaluate f(at + imag*ε)", **kw)
    common(p)
    p.add_argument("--at", type=float, required=True)
    p.add_argument("--imag", type=float, default=0.0)

    p = sub.add_parser("diff", help="value and exact derivative at a point", **kw)
    common(p)
    p.add_argument("--at", type=float, required=True)

    p = sub.add_parser("table", help="tabulate x, f(x), f'(x) over a grid", **kw)
    common(p, ("text", "csv", "json"))
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--step", type=float, required=True)

    p = sub.add_parser("check", help="compare the exact derivative with a central difference", **kw)
    common(p)
    p.add_argument("--at", type=float, required=True)
    p.add_argument("--h", type=float, default=1e-6)
    p.add_argument("--tol", type=float, default=1e-5)
    return parser


def _num(v, digits: int) -> str:
    return format(float(v), f".{digits}g")


def _jnum(v, digits: int):
    v = float(v)
    if not math.isfinite(v):
        return None
    return float(format(v, f".{digits}g"))


class _Function:
    """A parsed expression in at most one free variable."""

    def __init__(self, source: str):
        self.source = source
        self.node = parse_expression(source)
        names = sorted(free_variables(self.node))
        if len(names) > 1:
            raise UsageError(f"expression must have at most one free variable, found {', '.join(names)}")
        self.var = names[0] if names else None

    def __call__(self, z: Dual) -> Dual:
        return eval_dual(self.node, {self.var: z} if self.var else {})

    def real(self, x: float) -> float:
        return self(Dual(x, 0.0)).x


def _emit_json(obj):
    print(json.dumps(obj, ensure_ascii=False))


def cmd_eval(args) -> int:
    f = _Function(args.expr)
    z = f(Dual(args.at, args.imag))
    if args.format == "json":
        _emit_json({
            "expr": args.expr, "at": _jnum(args.at, args.digits), "imag": _jnum(args.imag, args.digits),
            "value": _jnum(z.x, args.digits), "epsilon": _jnum(z.y, args.digits),
        })
    else:
        print(D.format_dual(z, args.digits))
    return EXIT_OK


def cmd_diff(args) -> int:
    f = _Function(args.expr)
    z = f(Dual(args.at, 1.0))
    if args.format == "json":
        _emit_json({
            "expr": args.expr, "at": _jnum(args.at, args.digits),
            "value": _jnum(z.x, args.digits), "derivative": _jnum(z.y, args.digits),
        })
    else:
        print(f"value: {_num(z.x, args.digits)}")
        print(f"derivative: {_num(z.y, args.digits)}")
    return EXIT_OK


def grid(start: float, stop: float, step: float) -> list[float]:
    """Points start + k*step up to stop, computed from the index to avoid drift."""
    if not (math.isfinite(start) and math.isfinite(stop) and math.isfinite(step)):
        raise UsageError("--from, --to and --step must be finite")
    if not step > 0:
        raise UsageError("--step must be positive")
    if start > stop:
        raise UsageError("--from must not exceed --to")
    # the relative slack admits an endpoint lost to rounding, e.g. 0..0.3 by 0.1
    n = math.floor((stop - start) / step * (1 + 1e-12) + 1e-12)
    if n + 1 > MAX_ROWS:
        raise UsageError(f"grid would have more than {MAX_ROWS} rows")
    return [start + k * step for k in range(n + 1)]


def _row(f: _Function, x: float):
    try:
        z = f(Dual(x, 1.0))
        return z.x, z.y
    except _EVAL_ERRORS:
        pass
    try:
        return f.real(x), math.nan
    except _EVAL_ERRORS:
        return math.nan, math.nan


def cmd_table(args) -> int:
    f = _Function(args.expr)
    xs = grid(args.start, args.stop, args.step)
    rows = [(x, *_row(f, x)) for x in xs]
    d = args.digits
    if args.format == "json":
        _emit_json([
            {"expr": args.expr, "x": _jnum(x, d), "value": _jnum(v, d), "derivative": _jnum(dv, d)}
            for x, v, dv in rows
        ])
    elif args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["x", "f", "df"])
        for row in rows:
            w.writerow([_num(v, d) for v in row])
    else:
        width = d + 7
        print(f"{'x':>{width}} {'f':>{width}} {'df':>{width}}")
        for row in rows:
            print(" ".join(f"{_num(v, d):>{width}}" for v in row))
    return EXIT_OK


def cmd_check(args) -> int:
    if not args.h > 0:
        raise UsageError("--h must be positive")
    if not args.tol >= 0:
        raise UsageError("--tol must be non-negative")
    f = _Function(args.expr)
    z = f(Dual(args.at, 1.0))
    fd = fd_central(f.real, args.at, args.h)
    abs_diff = abs(z.y - fd)
    rel_diff = abs_diff / max(1.0, abs(z.y))
    ok = rel_diff <= args.tol
    d = args.digits
    if args.format == "json":
        _emit_json({
            "expr": args.expr, "at": _jnum(args.at, d), "value": _jnum(z.x, d),
            "derivative": _jnum(z.y, d), "fd_derivative": _jnum(fd, d),
            "abs_diff": _jnum(abs_diff, d), "rel_diff": _jnum(rel_diff, d),
        })
    else:
        print(f"dual derivative: {_num(z.y, d)}")
        print(f"fd derivative: {_num(fd, d)}")
        print(f"abs diff: {_num(abs_diff, d)}")
        print(f"rel diff: {_num(rel_diff, d)}")
    if not ok:
        print(f"dualnum: check failed: rel diff {_num(rel_diff, d)} exceeds tol {_num(args.tol, d)}", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


COMMANDS = {"eval": cmd_eval, "diff": cmd_diff, "table": cmd_table, "check": cmd_check}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if not 4 <= args.digits <= 17:
        print("dualnum: error: --digits must be between 4 and 17", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"dualnum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"dualnum: parse error at offset {exc.position}: {exc.message}", file=sys.stderr)
        print(f"  {args.expr}", file=sys.stderr)
        print(f"  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_PARSE
    except _EVAL_ERRORS as exc:
        where = getattr(exc, "position", None)
        loc = f" at offset {where}" if where is not None else ""
        if isinstance(exc, EvaluationError):
            print(f"dualnum: evaluation error{loc}: {exc.message}", file=sys.stderr)
        else:
            print(f"dualnum: domain error{loc}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
