"""Variables, function symbols and the term tree.

A :class:`Variable` is the pair ``(base, order)`` standing for ``d^order x_base``;
a second family of *difference* variables ``Δ^order x_base`` (``delta=True``)
backs the finite calculus.  Terms are immutable trees of :class:`Const`,
:class:`Var` and :class:`App` nodes.  Hashes and free-variable sets are computed
once at construction, so structural equality and ``free_vars`` stay cheap on
the large terms that iterated differentials produce.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from numbers import Real
from typing import Callable, Iterator, Sequence

from .errors import ArityMismatch


@dataclass(frozen=True)
class Variable:
    base: int
    order: int = 0
    delta: bool = False

    def __post_init__(self):
        if self.base < 0 or self.order < 0:
            raise ValueError("variable base and order must be natural numbers")
        if self.order == 0 and self.delta:
            # x_i is shared by both families
            object.__setattr__(self, "delta", False)

    @property
    def is_precalculus(self) -> bool:
        return self.order == 0

    @property
    def is_differential(self) -> bool:
        return self.order > 0 and not self.delta

    @property
    def is_difference(self) -> bool:
        return self.order > 0 and self.delta

    def sort_key(self):
        return (self.order, self.delta, self.base)

    def __str__(self):
        prefix = "D" if self.delta else "d"
        if self.order == 0:
            return f"x{self.base}"
        if self.order == 1:
            return f"{prefix}x{self.base}"
        return f"{prefix}^{self.order} x{self.base}"


def mk_var(base: int, order: int = 0) -> Variable:
    return Variable(base, order)


def d_var(v: Variable) -> Variable:
    """The differential ``dv``: same base, order one higher."""
    if v.delta:
        raise ValueError(f"d is not defined on the difference variable {v}")
    return Variable(v.base, v.order + 1)


def delta_var(v: Variable) -> Variable:
    """The formal difference variable ``Δv`` of a precalculus or difference variable."""
    if v.is_differential:
        raise ValueError(f"Δ is not defined on the differential variable {v}")
    return Variable(v.base, v.order + 1, delta=True)


@dataclass(frozen=True, eq=False)
class FunctionSymbol:
    """A named real function together with builders for its partial derivatives.

    ``partials[j]`` maps the argument terms ``(T_1, ..., T_n)`` to the term for
    ``D_j f(T_1, ..., T_n)``.  Symbols compare by ``(name, params)`` so that
    parametrised families such as ``pow_const(3)`` are interchangeable with a
    freshly built instance.
    """

    name: str
    arity: int
    eval: Callable[..., float] = field(repr=False)
    partials: tuple = field(repr=False)
    smooth: bool = True
    params: tuple = ()

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("arity must be positive")
        if len(self.partials) != self.arity:
            raise ValueError(
                f"{self.name}: {len(self.partials)} partial builders for arity {self.arity}"
            )

    @property
    def key(self):
        return (self.name, self.params)

    def __eq__(self, other):
        return isinstance(other, FunctionSymbol) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __call__(self, *args) -> "App":
        return App(self, [as_term(a) for a in args])

    def __str__(self):
        if self.params:
            return f"{self.name}{list(self.params)}"
        return self.name


class Term:
    """Base class of the immutable term tree."""

    __slots__ = ("_hash", "_fv", "_size")

    def __setattr__(self, name, value):
        raise AttributeError("terms are immutable")

    def __hash__(self):
        return self._hash

    @property
    def free_vars(self) -> frozenset:
        return self._fv

    @property
    def size(self) -> int:
        return self._size

    # arithmetic sugar builds raw applications without any simplification
    def __add__(self, other):
        from .registry import ADD
        return App(ADD, [self, as_term(other)])

    def __radd__(self, other):
        from .registry import ADD
        return App(ADD, [as_term(other), self])

    def __sub__(self, other):
        from .registry import SUB
        return App(SUB, [self, as_term(other)])

    def __rsub__(self, other):
        from .registry import SUB
        return App(SUB, [as_term(other), self])

    def __mul__(self, other):
        from .registry import MUL
        return App(MUL, [self, as_term(other)])

    def __rmul__(self, other):
        from .registry import MUL
        return App(MUL, [as_term(other), self])

    def __truediv__(self, other):
        from .registry import DIV
        return App(DIV, [self, as_term(other)])

    def __rtruediv__(self, other):
        from .registry import DIV
        return App(DIV, [as_term(other), self])

    def __neg__(self):
        from .registry import NEG
        return App(NEG, [self])

    def __pow__(self, other):
        from .registry import POW, pow_const
        if isinstance(other, Real):
            return App(pow_const(other), [self])
        return App(POW, [self, as_term(other)])

    def __str__(self):
        from .syntax import to_text
        return to_text(self)


class Const(Term):
    __hash__ = Term.__hash__
    __slots__ = ("value",)

    def __init__(self, value):
        object.__setattr__(self, "value", float(value))
        object.__setattr__(self, "_hash", hash(("const", self.value)))
        object.__setattr__(self, "_fv", frozenset())
        object.__setattr__(self, "_size", 1)

    def __eq__(self, other):
        return isinstance(other, Const) and self.value == other.value

    def __repr__(self):
        return f"Const({self.value!r})"


class Var(Term):
    __hash__ = Term.__hash__
    __slots__ = ("var",)

    def __init__(self, var: Variable):
        if not isinstance(var, Variable):
            raise TypeError(f"expected a Variable, got {var!r}")
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "_hash", hash(("var", var)))
        object.__setattr__(self, "_fv", frozenset((var,)))
        object.__setattr__(self, "_size", 1)

    def __eq__(self, other):
        return isinstance(other, Var) and self.var == other.var

    def __repr__(self):
        return f"Var({self.var})"


class App(Term):
    __hash__ = Term.__hash__
    __slots__ = ("fn", "args")

    def __init__(self, fn: FunctionSymbol, args: Sequence[Term]):
        args = tuple(args)
        if len(args) != fn.arity:
            raise ArityMismatch(f"{fn.name} expects {fn.arity} argument(s), got {len(args)}")
        for a in args:
            if not isinstance(a, Term):
                raise TypeError(f"argument {a!r} is not a term")
        object.__setattr__(self, "fn", fn)
        object.__setattr__(self, "args", args)
        object.__setattr__(self, "_hash", hash(("app", fn.key, args)))
        fv = args[0]._fv
        for a in args[1:]:
            fv = fv | a._fv
        object.__setattr__(self, "_fv", fv)
        object.__setattr__(self, "_size", 1 + sum(a._size for a in args))

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, App)
            and self._hash == other._hash
            and self.fn == other.fn
            and self.args == other.args
        )

    def __repr__(self):
        return f"App({self.fn.name}, {list(self.args)!r})"


def as_term(x) -> Term:
    if isinstance(x, Term):
        return x
    if isinstance(x, Variable):
        return Var(x)
    if isinstance(x, Real):
        return Const(x)
    raise TypeError(f"cannot interpret {x!r} as a term")


def x(base: int) -> Var:
    """Shorthand for the precalculus variable term ``x_base``."""
    return Var(Variable(base))


def dx(base: int, order: int = 1) -> Var:
    """Shorthand for the differential variable term ``d^order x_base``."""
    return Var(Variable(base, order))


def free_vars(t: Term) -> frozenset:
    return t.free_vars


def ordered_free_vars(t: Term) -> tuple:
    """Free variables sorted by differential order, then by base index."""
    return tuple(sorted(t.free_vars, key=Variable.sort_key))


def subterms(t: Term) -> list:
    """All subterms of ``t`` (with multiplicity), ``t`` itself first."""
    out = []
    stack = [t]
    while stack:
        u = stack.pop()
        out.append(u)
        if isinstance(u, App):
            stack.extend(reversed(u.args))
    return out


def iter_apps(t: Term) -> Iterator[App]:
    seen = set()
    stack = [t]
    while stack:
        u = stack.pop()
        if isinstance(u, App) and id(u) not in seen:
            seen.add(id(u))
            yield u
            stack.extend(u.args)


def non_smooth_symbol(t: Term):
    """The first non-smooth head symbol found in ``t``, or ``None``."""
    for app in iter_apps(t):
        if not app.fn.smooth:
            return app.fn
    return None


def is_strongly_differentiable(t: Term) -> bool:
    return non_smooth_symbol(t) is None
