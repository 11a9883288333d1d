import math
import random

import pytest

from formaldiff import App, Assignment, Registry, UnknownSymbol, Var, interpret, mk_var, partial
from formaldiff.oracle import fd_partial
from formaldiff.registry import (
    ADD, COS, DIV, EXP, IDENTITY, LN, MUL, NEG, POW, REGISTRY, SIN, SUB, pow_const,
)

WIDE = (-2.0, 2.0)
POSITIVE = (0.2, 3.0)

# each smooth symbol with the box its arguments are sampled from
SMOOTH = [
    (ADD, [WIDE, WIDE]), (SUB, [WIDE, WIDE]), (MUL, [WIDE, WIDE]), (NEG, [WIDE]),
    (DIV, [WIDE, POSITIVE]), (EXP, [WIDE]), (LN, [POSITIVE]), (SIN, [WIDE]), (COS, [WIDE]),
    (IDENTITY, [WIDE]), (POW, [POSITIVE, WIDE]), (pow_const(2), [WIDE]), (pow_const(3), [WIDE]),
    (pow_const(-1), [POSITIVE]), (pow_const(0.5), [POSITIVE]), (pow_const(1), [WIDE]),
    *[(REGISTRY.generic(name, level), [WIDE]) for name in "fgh" for level in range(4)],
]


@pytest.mark.parametrize("fn, box", SMOOTH, ids=lambda p: getattr(p, "name", None))
def test_smooth_partials_match_oracle(fn, box):
    assert fn.smooth and len(fn.partials) == fn.arity
    xs = [mk_var(i) for i in range(fn.arity)]
    t = App(fn, [Var(v) for v in xs])
    rng = random.Random(fn.name)
    for _ in range(20):
        s = Assignment({v: rng.uniform(*b) for v, b in zip(xs, box)})
        assert math.isfinite(interpret(t, s))
        for w in xs:
            got = interpret(partial(t, w), s)
            assert math.isfinite(got)
            assert got == pytest.approx(fd_partial(t, w, s), rel=1e-6, abs=1e-7)


def test_abs_is_not_smooth():
    assert not REGISTRY.get("abs").smooth


def test_registry_is_frozen_and_copyable():
    with pytest.raises(RuntimeError):
        REGISTRY.register(EXP, name="exp2")
    mine = REGISTRY.copy()
    mine.register(EXP, name="e")
    assert mine.get("e") is EXP and "e" not in REGISTRY
    with pytest.raises(UnknownSymbol):
        REGISTRY.get("e")


def test_user_generic():
    reg = Registry()
    k = reg.register_generic("k", lambda n, t: math.exp(2 * t) * 2**n)
    assert reg.is_generic("k")
    t = App(k, [Var(mk_var(0))])
    d = partial(t, mk_var(0))
    assert interpret(d, Assignment({mk_var(0): 0.5})) == pytest.approx(2 * math.e)
