"""Seeded random terms for property checks and demos."""

from __future__ import annotations

import random

from .registry import ABS, ADD, COS, DIV, EXP, IDENTITY, LN, MUL, NEG, POW, REGISTRY, SIN, SUB, pow_const
from .terms import App, Const, Term, Var, Variable

SMOOTH_SYMBOLS = (ADD, SUB, MUL, NEG, EXP, SIN, COS, pow_const(2), pow_const(3), IDENTITY)
ALL_SYMBOLS = SMOOTH_SYMBOLS + (
    DIV, LN, POW, ABS, pow_const(-1), pow_const(0.5), REGISTRY.get("f"), REGISTRY.get("g"),
    REGISTRY.generic("f", 2),
)


def precalculus_vars(n: int) -> list:
    return [Variable(i) for i in range(n)]


def random_term(rng: random.Random, depth: int, variables, symbols=SMOOTH_SYMBOLS,
                constants=(-2, -1, 0.5, 1, 2, 3), leaf_prob: float = 0.3) -> Term:
    """A random term of depth at most ``depth`` over ``variables`` and ``symbols``."""
    variables = list(variables)
    if depth == 0 or rng.random() < leaf_prob:
        if rng.random() < 0.75:
            return Var(rng.choice(variables))
        return Const(rng.choice(constants))
    fn = rng.choice(symbols)
    return App(fn, [random_term(rng, depth - 1, variables, symbols, constants, leaf_prob)
                    for _ in range(fn.arity)])


def random_smooth_term(rng: random.Random, depth: int = 4, variables=None) -> Term:
    """A term built only from everywhere-smooth primitives, mentioning at least one variable."""
    variables = variables or precalculus_vars(2)
    while True:
        t = random_term(rng, depth, variables)
        if t.free_vars:
            return t


def random_any_term(rng: random.Random, depth: int = 4) -> Term:
    """A term over every kind of symbol, constant and variable the syntax knows."""
    variables = [Variable(0), Variable(1), Variable(12), Variable(0, 1), Variable(1, 2),
                 Variable(3, 5), Variable(2, 1, delta=True), Variable(0, 3, delta=True)]
    constants = (0, 1, 2, -2, 0.5, -0.25, 3.141592653589793, 2.718281828459045, 1e-7, 12345.5)
    return random_term(rng, depth, variables, ALL_SYMBOLS, constants, leaf_prob=0.25)


def chain_rule_corpus(seed: int, count: int, depth: int = 4):
    """``count`` pairs ``(T, U)``; ``T`` mentions ``x0`` and ``U`` is a smooth term in ``x0, x1``."""
    rng = random.Random(seed)
    x0 = Variable(0)
    pairs = []
    while len(pairs) < count:
        t = random_smooth_term(rng, depth, [x0, Variable(1)])
        if x0 not in t.free_vars:
            continue
        u = random_smooth_term(rng, depth, [x0, Variable(1)])
        pairs.append((t, u))
    return pairs
