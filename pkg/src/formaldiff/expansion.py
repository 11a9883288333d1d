"""Normal form of a term as a polynomial in its differential variables.

Coefficients stay ordinary (unexpanded) terms free of differential
variables; only the differential part is collected into commutative
monomials, so ``dx dy dy`` and ``dy dx dy`` are the same row.
"""

from __future__ import annotations

from typing import Iterable

from .derivative import ONE, ZERO, _fold, mk_add, mk_mul, mk_neg, mk_prod, mk_sub, mk_sum
from .errors import NotPolynomialInDifferentials
from .registry import ADD, DIV, IDENTITY, MUL, NEG, SUB
from .semantics import Assignment, interpret
from .terms import App, Const, Term, Var, Variable


def _is_formal(v: Variable) -> bool:
    return v.order > 0


class DiffMonomial:
    """A commutative product of differential (or difference) variables."""

    __slots__ = ("factors",)

    def __init__(self, factors: Iterable[Variable] = ()):
        factors = tuple(sorted(factors, key=Variable.sort_key))
        for v in factors:
            if not _is_formal(v):
                raise ValueError(f"{v} is not a differential variable")
        object.__setattr__(self, "factors", factors)

    def __setattr__(self, name, value):
        raise AttributeError("monomials are immutable")

    def __eq__(self, other):
        return isinstance(other, DiffMonomial) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __mul__(self, other: "DiffMonomial") -> "DiffMonomial":
        return DiffMonomial(self.factors + other.factors)

    def sort_key(self):
        return tuple(v.sort_key() for v in self.factors)

    @property
    def weight(self) -> int:
        return sum(v.order for v in self.factors)

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __repr__(self):
        return f"DiffMonomial({' '.join(map(str, self.factors)) or '1'})"


UNIT = DiffMonomial()


def weight(m: DiffMonomial) -> int:
    return m.weight


class DiffPolynomial:
    """``sum_m coefficient(m) * m`` with no literal-zero coefficients."""

    def __init__(self, rows: dict | None = None):
        self.rows = {m: c for m, c in (rows or {}).items() if not _is_zero(c)}

    def __getitem__(self, m) -> Term:
        return self.rows.get(as_monomial(m), ZERO)

    def __iter__(self):
        return iter(self.monomials())

    def __len__(self):
        return len(self.rows)

    def monomials(self):
        return sorted(self.rows, key=DiffMonomial.sort_key)

    def items(self):
        return [(m, self.rows[m]) for m in self.monomials()]

    def to_term(self) -> Term:
        return mk_sum(mk_prod([c, *map(Var, m.factors)]) for m, c in self.items())

    def evaluate(self, s: Assignment) -> float:
        total = 0.0
        for m, c in self.items():
            r = interpret(c, s)
            for v in m.factors:
                r *= s(v)
            total += r
        return total

    def __str__(self):
        return str(self.to_term())

    def __repr__(self):
        return f"DiffPolynomial({ {repr(m): str(c) for m, c in self.items()} })"


def _is_zero(t):
    return isinstance(t, Const) and t.value == 0


def as_monomial(m) -> DiffMonomial:
    if isinstance(m, DiffMonomial):
        return m
    return DiffMonomial(v.var if isinstance(v, Var) else v for v in m)


def _has_formal(t: Term) -> bool:
    return any(_is_formal(v) for v in t.free_vars)


def _merge(p, q, combine, only_q):
    out = dict(p)
    for m, c in q.items():
        out[m] = combine(out[m], c) if m in out else only_q(c)
    return {m: c for m, c in out.items() if not _is_zero(c)}


def _times(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = m1 * m2
            c = mk_mul(c1, c2)
            out[m] = mk_add(out[m], c) if m in out else c
    return {m: c for m, c in out.items() if not _is_zero(c)}


def expand(t: Term) -> DiffPolynomial:
    """Distribute products over sums and collect rows by differential monomial.

    Differential variables may only occur under ``+``, ``-``, ``*``, negation,
    a division whose denominator is free of them, and non-negative integer
    constant powers; anything else raises :class:`NotPolynomialInDifferentials`.
    """
    memo = {}

    def go(u):
        if not _has_formal(u):
            return {} if _is_zero(u) else {UNIT: u}
        if isinstance(u, Var):
            return {DiffMonomial((u.var,)): ONE}
        key = id(u)
        if key in memo:
            return memo[key]
        fn = u.fn
        if fn == ADD:
            r = _merge(go(u.args[0]), go(u.args[1]), mk_add, lambda c: c)
        elif fn == SUB:
            r = _merge(go(u.args[0]), go(u.args[1]), mk_sub, mk_neg)
        elif fn == NEG:
            r = {m: mk_neg(c) for m, c in go(u.args[0]).items()}
        elif fn == MUL:
            r = _times(go(u.args[0]), go(u.args[1]))
        elif fn == IDENTITY:
            r = go(u.args[0])
        elif fn == DIV and not _has_formal(u.args[1]):
            den = u.args[1]
            r = {m: _fold(App(DIV, [c, den])) for m, c in go(u.args[0]).items()}
        elif fn.name == "pow_const" and float(fn.params[0]).is_integer() and fn.params[0] >= 0:
            base = go(u.args[0])
            r = {UNIT: ONE}
            for _ in range(int(fn.params[0])):
                r = _times(r, base)
        else:
            raise NotPolynomialInDifferentials(u)
        memo[key] = r
        return r

    return DiffPolynomial(go(t))


def coefficient(t: Term, m) -> Term:
    """The coefficient of monomial ``m`` in ``expand(t)``, ``0`` if absent."""
    return expand(t)[m]
