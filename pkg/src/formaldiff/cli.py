"""Command-line front end.

Exit status: 0 on success or an equivalent verdict, 1 when a check finds a
counterexample (or cannot conclude), 2 on usage, parse or engine errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .derivative import iterated_differential, partial, simplify
from .errors import FormalDiffError, NotPolynomialInDifferentials
from .expansion import DiffMonomial, expand
from .faa_di_bruno import faa_nth_derivative, partition_sum
from .finite_calculus import check_delta_chain_rule, iterated_delta
from .semantics import EquivConfig, semantic_equiv
from .substitution import check_chain_rule, subst_diff
from .syntax import parse, to_json, to_text
from .terms import Term, Var, Variable


class UsageError(FormalDiffError):
    pass


def parse_variable(text: str) -> Variable:
    t = parse(text)
    if not isinstance(t, Var):
        raise UsageError(f"{text!r} is not a variable")
    return t.var


_MONO_FACTOR = re.compile(r"\s*([dD]\^\d+\s*x\d+|[dD]+x\d+)\s*")


def parse_monomial(text: str) -> DiffMonomial:
    """Space-separated differential variables, e.g. ``"dx0 dx0 d^2 x1"``; ``"1"`` is empty."""
    if text.strip() in ("", "1"):
        return DiffMonomial()
    factors = []
    pos = 0
    while pos < len(text):
        m = _MONO_FACTOR.match(text, pos)
        if m is None:
            raise UsageError(f"bad monomial {text!r} at offset {pos}")
        factors.append(parse_variable(m.group(1)))
        pos = m.end()
    return DiffMonomial(factors)


def render(t: Term) -> str:
    """Expanded, collected form when possible, otherwise the simplified term."""
    try:
        return to_text(expand(t).to_term())
    except NotPolynomialInDifferentials:
        return to_text(simplify(t))


def _equiv_config(args) -> EquivConfig:
    return EquivConfig(samples=args.samples, tolerance=args.tol,
                       range=tuple(args.range), seed=args.seed)


def _add_equiv_options(p):
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--range", type=float, nargs=2, default=[-2.0, 2.0], metavar=("LO", "HI"))
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="formaldiff", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse and pretty-print a term")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true", help="print the JSON syntax tree")

    p = sub.add_parser("d", help="iterated total differential")
    p.add_argument("expr")
    p.add_argument("-k", type=int, default=1)
    p.add_argument("--raw", action="store_true", help="do not collect by monomial")

    p = sub.add_parser("partial", help="partial derivative")
    p.add_argument("-w", required=True, help="variable, e.g. x0 or dx1")
    p.add_argument("expr")

    p = sub.add_parser("subst", help="differential-respecting substitution T[v|U]")
    p.add_argument("-v", required=True)
    p.add_argument("-u", required=True)
    p.add_argument("expr")

    p = sub.add_parser("coeff", help="coefficient of a differential monomial")
    p.add_argument("-m", required=True, help='monomial, e.g. "dx0 dx0"')
    p.add_argument("-k", type=int, default=0, help="differentiate k times first")
    p.add_argument("expr")

    p = sub.add_parser("expand", help="collect a term by differential monomial")
    p.add_argument("expr")
    p.add_argument("--rows", action="store_true", help="one 'monomial: coefficient' per line")

    p = sub.add_parser("equiv", help="sampled semantic equivalence")
    p.add_argument("left")
    p.add_argument("right")
    _add_equiv_options(p)

    p = sub.add_parser("faa", help="Faà di Bruno: n-th derivative of f(g(x0))")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-f", default="f")
    p.add_argument("-g", default="g")
    p.add_argument("--sum", action="store_true",
                   help="print the partition sum for d^n f(x0) instead")

    p = sub.add_parser("delta", help="forward difference with formal step Dx")
    p.add_argument("-x", default="x0")
    p.add_argument("-k", type=int, default=1)
    p.add_argument("expr")

    p = sub.add_parser("delta-chain", help="check the finite-calculus chain rule on a grid")
    p.add_argument("-f", required=True)
    p.add_argument("-g", required=True)
    p.add_argument("-x", default="x0")
    p.add_argument("--grid", type=int, nargs=2, required=True, metavar=("LO", "HI"))

    p = sub.add_parser("check-chain", help="check d^k(T[v|U]) == (d^k T)[v|U]")
    p.add_argument("-T", required=True)
    p.add_argument("-v", required=True)
    p.add_argument("-u", required=True)
    p.add_argument("-k", type=int, default=1)
    _add_equiv_options(p)
    return parser


def _dispatch(args, out) -> int:
    cmd = args.command
    if cmd == "parse":
        t = parse(args.expr)
        print(json.dumps(to_json(t)) if args.json else to_text(t), file=out)
    elif cmd == "d":
        t = iterated_differential(parse(args.expr), args.k)
        print(to_text(t) if args.raw else render(t), file=out)
    elif cmd == "partial":
        print(to_text(partial(parse(args.expr), parse_variable(args.w))), file=out)
    elif cmd == "subst":
        print(to_text(subst_diff(parse(args.expr), parse_variable(args.v), parse(args.u))),
              file=out)
    elif cmd == "coeff":
        t = iterated_differential(parse(args.expr), args.k)
        print(to_text(expand(t)[parse_monomial(args.m)]), file=out)
    elif cmd == "expand":
        poly = expand(parse(args.expr))
        if args.rows:
            for m, c in poly.items():
                print(f"{' '.join(map(str, m)) or '1'}: {to_text(c)}", file=out)
        else:
            print(to_text(poly.to_term()), file=out)
    elif cmd == "equiv":
        verdict = semantic_equiv(parse(args.left), parse(args.right), _equiv_config(args))
        print(verdict, file=out)
        return 0 if verdict else 1
    elif cmd == "faa":
        x0 = Variable(0)
        if args.sum:
            t = partition_sum(args.f, x0, args.n)
        else:
            t = faa_nth_derivative(args.f, args.g, args.n, x0)
        print(to_text(t), file=out)
    elif cmd == "delta":
        t = iterated_delta(parse(args.expr), parse_variable(args.x), args.k)
        print(to_text(simplify(t)), file=out)
    elif cmd == "delta-chain":
        lo, hi = args.grid
        verdict = check_delta_chain_rule(parse(args.f), parse_variable(args.x), parse(args.g),
                                         range(lo, hi + 1))
        print(verdict, file=out)
        return 0 if verdict else 1
    elif cmd == "check-chain":
        verdict = check_chain_rule(parse(args.T), parse_variable(args.v), parse(args.u), args.k,
                                   _equiv_config(args))
        print(verdict, file=out)
        return 0 if verdict else 1
    return 0


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return _dispatch(args, out)
    except (FormalDiffError, ValueError) as e:
        print(f"formaldiff: error: {e}", file=err)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
