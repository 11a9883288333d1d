"""Variable maps, their extension to terms, and differential-respecting
substitution ``T[v|U]``."""

from __future__ import annotations

from typing import Iterable, Mapping

from .derivative import iterated_differential, total_differential
from .errors import NotDifferentiable, OrderNotZero
from .semantics import EQUIVALENT, Assignment, EquivConfig, Verdict, interpret, semantic_equiv
from .terms import App, Const, Term, Var, Variable, as_term, d_var


class VarMap:
    """A finite map from variables to terms, the identity elsewhere."""

    def __init__(self, mapping: Mapping[Variable, Term] | None = None):
        self.mapping = {v: as_term(t) for v, t in (mapping or {}).items()}

    def __call__(self, v: Variable) -> Term:
        t = self.mapping.get(v)
        return Var(v) if t is None else t

    def __repr__(self):
        inner = ", ".join(f"{v} -> {t}" for v, t in self.mapping.items())
        return f"VarMap({{{inner}}})"

    def apply_to_assignment(self, s: Assignment) -> Assignment:
        """The assignment ``v -> phi0(v)^s``, explicit on every mapped variable."""
        bindings = dict(s.bindings)
        bindings.update((v, interpret(t, s)) for v, t in self.mapping.items())
        return Assignment(bindings, s.default)


def _as_varmap(phi0) -> VarMap:
    return phi0 if isinstance(phi0, VarMap) else VarMap(phi0)


def extend(phi0, t: Term) -> Term:
    """Apply ``phi0`` to every variable occurrence of ``t``; constants are fixed."""
    phi0 = _as_varmap(phi0)
    if not phi0.mapping or not (t.free_vars & phi0.mapping.keys()):
        return t
    memo = {}

    def go(u):
        if isinstance(u, Const):
            return u
        if isinstance(u, Var):
            return phi0(u.var)
        if not (u.free_vars & phi0.mapping.keys()):
            return u
        key = id(u)
        if key not in memo:
            memo[key] = App(u.fn, [go(a) for a in u.args])
        return memo[key]

    return go(t)


def respects_d(phi0, variables: Iterable[Variable], cfg: EquivConfig | None = None) -> Verdict:
    """Check ``phi0(dv) == d phi0(v)`` for each ``v`` in ``variables``."""
    phi0 = _as_varmap(phi0)
    for v in sorted(set(variables), key=Variable.sort_key):
        if v.delta:
            continue
        lhs = phi0(d_var(v))
        rhs = total_differential(phi0(v))
        verdict = semantic_equiv(lhs, rhs, cfg)
        if verdict.status != EQUIVALENT:
            return Verdict(verdict.status, verdict.assignment, verdict.values,
                           f"at {v}: {lhs} vs d({phi0(v)}) {verdict.detail}".rstrip())
    return Verdict(EQUIVALENT)


def max_order_of(t: Term, v: Variable) -> int:
    """Largest ``k`` such that ``d^k v`` occurs in ``t`` (``-1`` if none does)."""
    orders = [w.order for w in t.free_vars if w.base == v.base and not w.delta]
    return max(orders, default=-1)


def substitution_map(t: Term, v: Variable, u: Term) -> VarMap:
    """The map ``v -> U, d^k v -> d^k U`` for every order ``k`` occurring in ``t``."""
    if v.order != 0 or v.delta:
        raise OrderNotZero(f"{v} is not a precalculus variable")
    u = as_term(u)
    mapping = {}
    level = u
    for k in range(max_order_of(t, v) + 1):
        if k:
            try:
                level = total_differential(level)
            except NotDifferentiable as e:
                raise NotDifferentiable(e.symbol, k - 1) from None
        mapping[Variable(v.base, k)] = level
    return VarMap(mapping)


def subst_diff(t: Term, v: Variable, u: Term) -> Term:
    """``T[v|U]``: replace ``v`` by ``U`` and each ``d^k v`` by ``d^k U``."""
    return extend(substitution_map(t, v, u), t)


def check_chain_rule(t: Term, v: Variable, u: Term, k: int,
                     cfg: EquivConfig | None = None) -> Verdict:
    """Compare ``d^k(T[v|U])`` against ``(d^k T)[v|U]`` by sampling."""
    lhs = iterated_differential(subst_diff(t, v, u), k)
    rhs = subst_diff(iterated_differential(t, k), v, u)
    return semantic_equiv(lhs, rhs, cfg)
