"""Formal partial derivatives, total differentials and a light simplifier.

Differentiation is syntactic: an application ``f(T_1, ..., T_n)`` is
differentiated with the multivariable chain rule over the registry's partial
builders.  Differential variables are ordinary independent variables here, so
``partial(x0*dx0, dx0)`` is ``x0``.
"""

from __future__ import annotations

import math
from enum import Enum

from .errors import MixedVariables, NotDifferentiable
from .registry import ADD, MUL, NEG, SUB
from .terms import App, Const, Term, Var, Variable, d_var, non_smooth_symbol, ordered_free_vars

ZERO = Const(0)
ONE = Const(1)


class SimplifyPolicy(Enum):
    NONE = "none"
    LIGHT = "light"


def _is(t, value):
    return isinstance(t, Const) and t.value == value


def _fold(app: App) -> Term:
    if all(isinstance(a, Const) for a in app.args):
        try:
            r = app.fn.eval(*(a.value for a in app.args))
        except (ArithmeticError, ValueError):
            return app
        if isinstance(r, (int, float)) and math.isfinite(r):
            return Const(r)
    return app


def mk_add(a: Term, b: Term) -> Term:
    if _is(a, 0):
        return b
    if _is(b, 0):
        return a
    return _fold(App(ADD, [a, b]))


def mk_mul(a: Term, b: Term) -> Term:
    if _is(a, 0) or _is(b, 0):
        return ZERO
    if _is(a, 1):
        return b
    if _is(b, 1):
        return a
    return _fold(App(MUL, [a, b]))


def mk_sub(a: Term, b: Term) -> Term:
    if _is(b, 0):
        return a
    return _fold(App(SUB, [a, b]))


def mk_neg(a: Term) -> Term:
    return _fold(App(NEG, [a]))


def mk_sum(terms) -> Term:
    out = ZERO
    for t in terms:
        out = mk_add(out, t)
    return out


def mk_prod(terms) -> Term:
    out = ONE
    for t in terms:
        out = mk_mul(out, t)
    return out


def _rebuild(app: App, args) -> Term:
    fn = app.fn
    if fn == MUL:
        return mk_mul(*args)
    if fn == ADD:
        return mk_add(*args)
    if fn == SUB:
        return mk_sub(*args)
    return _fold(App(fn, args))


def simplify(t: Term, policy: SimplifyPolicy | str = SimplifyPolicy.LIGHT, keep=()) -> Term:
    """Bottom-up pass applying only ``0*T, T*0 -> 0``, ``1*T, T*1 -> T``,
    ``T+0, 0+T -> T`` (and ``T-0 -> T``) plus constant folding.

    Subterms that are identical objects to an element of ``keep`` are assumed
    simplified already and left alone.
    """
    if SimplifyPolicy(policy) is SimplifyPolicy.NONE:
        return t
    memo = {id(k): k for k in keep}

    def go(u):
        if not isinstance(u, App):
            return u
        key = id(u)
        if key not in memo:
            memo[key] = _rebuild(u, [go(a) for a in u.args])
        return memo[key]

    return go(t)


def _check_smooth(t: Term, level=None):
    bad = non_smooth_symbol(t)
    if bad is not None:
        raise NotDifferentiable(bad.name, level)


def partial(t: Term, w: Variable) -> Term:
    """The formal partial derivative of ``t`` with respect to ``w``.

    Raises :class:`NotDifferentiable` if any subterm's head symbol is not
    smooth, even where that subterm does not depend on ``w``.
    """
    _check_smooth(t)
    return _partial(t, w, {})


def _partial(t: Term, w: Variable, memo) -> Term:
    if w not in t.free_vars:
        return ZERO
    if isinstance(t, Var):
        return ONE
    if t in memo:
        return memo[t]
    out = ZERO
    for j, arg in enumerate(t.args):
        if w not in arg.free_vars:
            continue
        outer = simplify(t.fn.partials[j](t.args), keep=t.args)
        out = mk_add(out, mk_mul(outer, _partial(arg, w, memo)))
    memo[t] = out
    return out


def total_differential(t: Term) -> Term:
    """``dT = sum_i (dT/dv_i) dv_i`` over the ordered free variables of ``t``."""
    _check_smooth(t)
    ofv = ordered_free_vars(t)
    if any(v.delta for v in ofv):
        raise MixedVariables("d is not defined on terms with difference variables")
    return mk_sum(mk_mul(_partial(t, v, {}), Var(d_var(v))) for v in ofv)


def iterated_differential(t: Term, k: int) -> Term:
    """``d^k T``; ``k = 0`` returns ``t`` unchanged."""
    if k < 0:
        raise ValueError("k must be a natural number")
    for level in range(k):
        try:
            t = total_differential(t)
        except NotDifferentiable as e:
            raise NotDifferentiable(e.symbol, level) from None
    return t
