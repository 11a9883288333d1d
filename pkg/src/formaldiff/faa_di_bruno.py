"""Set partitions and the combinatorial form of higher chain rules.

For a partition ``pi = {B_1, ..., B_k}`` of ``{1, ..., n}`` the term
``I(pi) = f^(k)(x) d^|B_1|x ... d^|B_k|x`` sums over all partitions to
``d^n f(x)``; substituting ``g(x)`` for ``x`` and keeping the ``(dx)^n`` row
gives Faà di Bruno's formula for ``f(g(x))^(n)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .derivative import mk_prod, mk_sum, partial
from .errors import OrderNotZero, TooLarge
from .registry import REGISTRY
from .substitution import extend
from .terms import App, FunctionSymbol, Term, Var, Variable

MAX_N = 10


@dataclass(frozen=True)
class Partition:
    """A set partition of ``{1, ..., n}``; blocks are sorted tuples ordered by least element."""

    blocks: tuple

    def __len__(self):
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_sizes(self) -> tuple:
        return tuple(sorted(len(b) for b in self.blocks))

    def __str__(self):
        return "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def restricted_growth_strings(n: int) -> Iterator[tuple]:
    """Strings ``a`` with ``a[0] = 0`` and ``a[i] <= max(a[:i]) + 1``, in lexicographic order."""
    if n == 0:
        yield ()
        return
    a = [0] * n

    def rec(i, top):
        if i == n:
            yield tuple(a)
            return
        for v in range(top + 2):
            a[i] = v
            yield from rec(i + 1, max(top, v))

    yield from rec(1, 0)


def partitions(n: int) -> Iterator[Partition]:
    """Every partition of ``{1, ..., n}`` exactly once (Bell(n) of them)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_N:
        raise TooLarge(f"refusing to enumerate partitions of more than {MAX_N} elements")
    for rgs in restricted_growth_strings(n):
        blocks = [[] for _ in range(max(rgs) + 1)]
        for element, b in enumerate(rgs, start=1):
            blocks[b].append(element)
        yield Partition(tuple(tuple(b) for b in blocks))


def _symbol(f) -> FunctionSymbol:
    return REGISTRY.get(f) if isinstance(f, str) else f


def nth_derivative_term(f, k: int, arg: Term) -> Term:
    """``f^(k)(arg)`` built by iterating the registry's partial builders."""
    f = _symbol(f)
    if f.arity != 1:
        raise ValueError(f"{f.name} is not unary")
    y = Variable(0)
    t = App(f, [Var(y)])
    for _ in range(k):
        t = partial(t, y)
    return extend({y: arg}, t)


def _diff_power(x: Variable, size: int) -> Var:
    return Var(Variable(x.base, size))


def i_of_partition(f, x: Variable, pi: Partition) -> Term:
    if x.order != 0:
        raise OrderNotZero(f"{x} is not a precalculus variable")
    head = nth_derivative_term(f, len(pi), Var(x))
    return mk_prod([head, *(_diff_power(x, size) for size in pi.block_sizes())])


def partition_sum(f, x: Variable, n: int) -> Term:
    """``sum over pi in Pi_n of I(pi)``, equivalent to ``d^n f(x)``."""
    return mk_sum(i_of_partition(f, x, pi) for pi in partitions(n))


def faa_nth_derivative(f, g, n: int, x: Variable = Variable(0)) -> Term:
    """``f(g(x))^(n) = sum_pi f^(|pi|)(g(x)) prod_B g^(|B|)(x)`` as a term in ``x``."""
    f, g = _symbol(f), _symbol(g)
    gx = App(g, [Var(x)])
    terms = []
    for pi in partitions(n):
        inner = [nth_derivative_term(g, size, Var(x)) for size in pi.block_sizes()]
        terms.append(mk_prod([nth_derivative_term(f, len(pi), gx), *inner]))
    return mk_sum(terms)
