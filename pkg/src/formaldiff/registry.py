"""The closed registry of named primitives.

Every symbol carries a float evaluator and one partial-derivative builder per
argument.  Builders return raw terms; callers that care about size run them
through :func:`formaldiff.derivative.simplify`.

``smooth`` means smooth on the symbol's natural domain (``div`` away from a
zero denominator, ``ln`` and ``pow`` on a positive base).  Only ``abs`` is
registered as non-smooth.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import DomainError, NotDifferentiable, UnknownSymbol
from .terms import App, Const, FunctionSymbol


def _div(a, b):
    if b == 0:
        raise DomainError("division by zero")
    return a / b


def _ln(a):
    if a <= 0:
        raise DomainError(f"ln of nonpositive value {a!r}")
    return math.log(a)


def _pow(a, b):
    if a <= 0:
        raise DomainError(f"pow with nonpositive base {a!r}")
    return a**b


def _is_integral(k):
    return float(k).is_integer()


def _no_partial(name):
    def build(args):
        raise NotDifferentiable(name)

    return build


ONE = Const(1)

ADD = FunctionSymbol("add", 2, lambda a, b: a + b, (lambda args: ONE, lambda args: ONE))
SUB = FunctionSymbol("sub", 2, lambda a, b: a - b, (lambda args: ONE, lambda args: Const(-1)))
MUL = FunctionSymbol(
    "mul", 2, lambda a, b: a * b, (lambda args: args[1], lambda args: args[0])
)
NEG = FunctionSymbol("neg", 1, lambda a: -a, (lambda args: Const(-1),))
DIV = FunctionSymbol(
    "div",
    2,
    _div,
    (
        lambda args: App(DIV, [ONE, args[1]]),
        lambda args: App(NEG, [App(DIV, [args[0], App(pow_const(2), [args[1]])])]),
    ),
)
EXP = FunctionSymbol("exp", 1, math.exp, (lambda args: App(EXP, args),))
LN = FunctionSymbol("ln", 1, _ln, (lambda args: App(DIV, [ONE, args[0]]),))
SIN = FunctionSymbol("sin", 1, math.sin, (lambda args: App(COS, args),))
COS = FunctionSymbol("cos", 1, math.cos, (lambda args: App(NEG, [App(SIN, args)]),))
ABS = FunctionSymbol("abs", 1, abs, (_no_partial("abs"),), smooth=False)
IDENTITY = FunctionSymbol("identity", 1, lambda a: a, (lambda args: ONE,))
POW = FunctionSymbol(
    "pow",
    2,
    _pow,
    (
        lambda args: App(MUL, [args[1], App(POW, [args[0], App(SUB, [args[1], ONE])])]),
        lambda args: App(MUL, [App(POW, list(args)), App(LN, [args[0]])]),
    ),
)


@lru_cache(maxsize=None)
def pow_const(k) -> FunctionSymbol:
    """``x -> x**k`` for a fixed real exponent ``k``."""
    k = float(k)
    integral = _is_integral(k)

    def ev(a):
        if a == 0 and k < 0:
            raise DomainError("zero to a negative power")
        if a < 0 and not integral:
            raise DomainError(f"negative base {a!r} to non-integer power {k!r}")
        return a**k

    def partial(args):
        if k == 1:
            return ONE
        if k == 2:
            return App(MUL, [Const(2), args[0]])
        return App(MUL, [Const(k), App(pow_const(k - 1), args)])

    return FunctionSymbol("pow_const", 1, ev, (partial,), params=(k,))


def _default_nth(seed):
    # a fixed smooth function with nonvanishing, distinct derivatives
    a, c, b, w = seed

    def nth(k, t):
        return a**k * math.sin(a * t + c + k * math.pi / 2) + w * b**k * math.exp(b * t)

    return nth


_GENERIC_SEEDS = {
    "f": (1.0, 0.3, 0.5, 1.0),
    "g": (1.3, -0.7, -0.4, 0.8),
    "h": (0.7, 1.1, 0.9, -0.6),
}


class Registry:
    """Name-indexed table of function symbols.

    Uninterpreted unary families (``f``, ``g``, ...) are registered with a
    numeric ``nth(k, x)`` evaluator for their ``k``-th derivative; level ``k``
    is the symbol ``FunctionSymbol(name, params=(k,))``.
    """

    def __init__(self):
        self._symbols = {}
        self._generic = {}
        self._frozen = False

    def register(self, symbol: FunctionSymbol, name: str | None = None):
        if self._frozen:
            raise RuntimeError("registry is frozen")
        self._symbols[name or symbol.name] = symbol
        return symbol

    def register_generic(self, name: str, nth=None):
        if self._frozen:
            raise RuntimeError("registry is frozen")
        if nth is None:
            nth = _default_nth(_GENERIC_SEEDS.get(name, (0.9, 0.2, 0.3, 0.5)))
        self._generic[name] = nth
        return self.generic(name, 0)

    def freeze(self):
        self._frozen = True

    def copy(self) -> "Registry":
        new = Registry()
        new._symbols = dict(self._symbols)
        new._generic = dict(self._generic)
        return new

    def is_generic(self, name: str) -> bool:
        return name in self._generic

    @lru_cache(maxsize=None)
    def generic(self, name: str, level: int = 0) -> FunctionSymbol:
        try:
            nth = self._generic[name]
        except KeyError:
            raise UnknownSymbol(name) from None

        def partial(args):
            return App(self.generic(name, level + 1), args)

        return FunctionSymbol(name, 1, lambda t: nth(level, t), (partial,), params=(level,))

    def get(self, name: str) -> FunctionSymbol:
        if name in self._symbols:
            return self._symbols[name]
        if name in self._generic:
            return self.generic(name, 0)
        raise UnknownSymbol(name)

    def __contains__(self, name):
        return name in self._symbols or name in self._generic

    def names(self):
        return sorted(set(self._symbols) | set(self._generic))


REGISTRY = Registry()
for _sym in (ADD, SUB, MUL, DIV, NEG, EXP, LN, SIN, COS, ABS, IDENTITY, POW):
    REGISTRY.register(_sym)
REGISTRY.register(pow_const(2), name="square")
for _name in _GENERIC_SEEDS:
    REGISTRY.register_generic(_name)
REGISTRY.freeze()

SQUARE = pow_const(2)
