"""The forward difference ``Δ`` with a formal step variable ``Δx``.

``Δx`` is kept symbolic so a substitution can tell it apart from an ordinary
constant ``1``; it is only set to ``1`` when a term is evaluated.  Difference
variables and differential variables never share a term.
"""

from __future__ import annotations

from typing import Iterable

from .errors import MixedVariables, OrderNotZero
from .registry import ADD, SUB
from .semantics import COUNTEREXAMPLE, EQUIVALENT, Assignment, Verdict, interpret
from .substitution import VarMap, extend
from .terms import App, Term, Var, Variable, as_term, delta_var


def check_delta_term(t: Term) -> Term:
    t = as_term(t)
    if any(v.is_differential for v in t.free_vars) and any(v.is_difference for v in t.free_vars):
        raise MixedVariables(f"{t} mixes differential and difference variables")
    return t


def _precalculus(x: Variable):
    if x.order != 0:
        raise OrderNotZero(f"{x} is not a precalculus variable")


def delta(t: Term, x: Variable) -> Term:
    """``Δ T = T[x -> x + Δx] - T`` (unsimplified)."""
    _precalculus(x)
    t = check_delta_term(t)
    if any(v.is_differential for v in t.free_vars):
        # the result would carry both dx and Δx
        raise MixedVariables(f"cannot take a difference of {t}, it has differential variables")
    step = Var(delta_var(x))
    shifted = extend({x: App(ADD, [Var(x), step])}, t)
    return App(SUB, [shifted, t])


def iterated_delta(t: Term, x: Variable, k: int) -> Term:
    for _ in range(k):
        t = delta(t, x)
    return t


def delta_subst(t: Term, x: Variable, g: Term) -> Term:
    """``T⟦x|g⟧``: replace ``x`` by ``g`` and each ``Δ^k x`` by ``Δ^k g``.

    Constants are never touched, so ``1/(1 + x^2)`` becomes ``1/(1 + g^2)``.
    """
    _precalculus(x)
    t = check_delta_term(t)
    g = as_term(g)
    if any(v.is_difference for v in g.free_vars):
        raise ValueError("the substituted term must be free of difference variables")
    orders = [v.order for v in t.free_vars if v.base == x.base and v.is_difference]
    mapping = {x: g}
    for k in range(1, max(orders, default=0) + 1):
        mapping[Variable(x.base, k, delta=True)] = iterated_delta(g, x, k)
    return extend(VarMap(mapping), t)


def unit_step(x: Variable, value: float, others=None) -> Assignment:
    """The assignment ``x -> value, Δx -> 1`` used to read a Δ-term as a difference."""
    bindings = dict(others or {})
    bindings[x] = value
    bindings[delta_var(x)] = 1.0
    return Assignment(bindings)


def check_delta_chain_rule(f: Term, x: Variable, g: Term, grid: Iterable[int]) -> Verdict:
    """Evaluate ``Δ(f⟦x|g⟧)`` and ``(Δf)⟦x|g⟧`` at each grid point with ``Δx = 1``
    and require exact agreement."""
    lhs = delta(delta_subst(f, x, g), x)
    rhs = delta_subst(delta(f, x), x, g)
    for point in grid:
        s = unit_step(x, point)
        a, b = interpret(lhs, s), interpret(rhs, s)
        if a != b:
            return Verdict(COUNTEREXAMPLE, s, (a, b), f"at {x} = {point}")
    return Verdict(EQUIVALENT)
