"""End-to-end acceptance checks, one test per criterion.

Run on their own with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import io
import math
import random

import pytest

from formaldiff import (
    App,
    Assignment,
    DomainError,
    EquivConfig,
    NotDifferentiable,
    Var,
    interpret,
    iterated_differential,
    mk_var,
    ordered_free_vars,
    parse,
    partial,
    semantic_equiv,
    to_text,
    total_differential,
    dx,
    x,
)
from formaldiff.cli import run
from formaldiff.expansion import DiffMonomial, coefficient, expand
from formaldiff.faa_di_bruno import faa_nth_derivative, partition_sum, partitions
from formaldiff.finite_calculus import check_delta_chain_rule, delta, unit_step
from formaldiff.generators import (
    ALL_SYMBOLS,
    chain_rule_corpus,
    random_any_term,
    random_smooth_term,
    random_term,
)
from formaldiff.oracle import fd_mixed_partial, fd_nth_composition, fd_partial
from formaldiff.registry import ABS, EXP, REGISTRY, pow_const
from formaldiff.substitution import VarMap, check_chain_rule, extend, subst_diff

X0, X1, X2 = mk_var(0), mk_var(1), mk_var(2)
DX0, DX1 = mk_var(0, 1), mk_var(1, 1)
GOLDEN_CFG = EquivConfig(samples=100, tolerance=1e-9, seed=1)


def _brute_partitions(elements):
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for p in _brute_partitions(rest):
        yield [[first]] + p
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]


def test_criterion_01_golden_examples():
    cases = [
        (iterated_differential(parse("x0^2"), 2), "2*dx0*dx0 + 2*x0*d^2 x0"),
        (iterated_differential(parse("exp(x0)"), 2), "exp(x0)*dx0*dx0 + exp(x0)*d^2 x0"),
        (total_differential(parse("x0*dx0")), "dx0*dx0 + x0*d^2 x0"),
    ]
    for term, golden in cases:
        assert str(expand(term)) == golden
        assert semantic_equiv(term, parse(golden), GOLDEN_CFG)
    ofv_term = (App(EXP, [x(1) + x(3) + x(2) + x(2) + x(99)])
                * dx(1) * dx(1, 3) * dx(2) * dx(0, 50))
    assert ordered_free_vars(ofv_term) == (
        mk_var(1), mk_var(2), mk_var(3), mk_var(99),
        mk_var(1, 1), mk_var(2, 1), mk_var(1, 3), mk_var(0, 50),
    )


def test_criterion_02_chain_rule_suite():
    cfg = EquivConfig(samples=200, tolerance=1e-7, seed=2026)
    failures = []
    pairs = chain_rule_corpus(seed=2026, count=50, depth=4)
    assert len(pairs) >= 50
    for t, u in pairs:
        for k in (1, 2, 3):
            verdict = check_chain_rule(t, X0, u, k, cfg)
            if not verdict:
                failures.append((to_text(t), to_text(u), k, verdict.status))
    assert failures == []


def test_criterion_03_composition_second_derivative():
    composed = subst_diff(iterated_differential(parse("exp(x0)"), 2), X0, parse("x0^2"))
    coeff = coefficient(composed, DiffMonomial([DX0, DX0]))
    assert semantic_equiv(coeff, parse("(4*x0^2 + 2)*exp(x0^2)"), GOLDEN_CFG)
    rng = random.Random(3)
    for _ in range(20):
        x0 = rng.uniform(-1.5, 1.5)
        numeric = fd_nth_composition(math.exp, lambda v: v * v, 2, x0)
        assert interpret(coeff, Assignment({X0: x0})) == pytest.approx(numeric, rel=1e-4)


def test_criterion_04_faa_di_bruno():
    for n, bell in zip(range(1, 6), [1, 2, 5, 15, 52]):
        brute = {tuple(sorted(tuple(sorted(b)) for b in p))
                 for p in _brute_partitions(list(range(1, n + 1)))}
        got = [tuple(sorted(p.blocks)) for p in partitions(n)]
        assert len(brute) == bell
        assert len(got) == bell and set(got) == brute

    cfg = EquivConfig(tolerance=1e-7, seed=4)
    for name in ("exp", "sin"):
        for n in range(1, 6):
            direct = iterated_differential(App(REGISTRY.get(name), [Var(X0)]), n)
            assert semantic_equiv(partition_sum(name, X0, n), direct, cfg)

    evaluators = {"exp": math.exp, "sin": math.sin, "square": lambda v: v * v}
    rng = random.Random(4)
    for f, g in [("exp", "square"), ("sin", "square"), ("exp", "sin")]:
        for n in range(1, 5):
            composed = App(REGISTRY.get(f), [App(REGISTRY.get(g), [Var(X0)])])
            faa = faa_nth_derivative(f, g, n)
            assert semantic_equiv(faa, coefficient(iterated_differential(composed, n), [DX0] * n), cfg)
            if n == 4:
                for _ in range(10):
                    x0 = rng.uniform(-1.5, 1.5)
                    numeric = fd_nth_composition(evaluators[f], evaluators[g], 4, x0)
                    symbolic = interpret(faa, Assignment({X0: x0}))
                    # relative error, measured against a unit scale near roots
                    assert abs(symbolic - numeric) <= 1e-3 * max(1.0, abs(symbolic))


def test_criterion_05_substitution_commutes_with_evaluation():
    rng = random.Random(5)
    variables = [X0, X1, DX0, DX1]
    checked = 0
    while checked < 200:
        t = random_term(rng, 4, variables, ALL_SYMBOLS)
        phi = VarMap({v: random_term(rng, 3, variables, ALL_SYMBOLS)
                      for v in variables if rng.random() < 0.6})
        s = Assignment({v: rng.uniform(-2, 2) for v in variables})
        try:
            lhs = interpret(extend(phi, t), s)
            rhs = interpret(t, phi.apply_to_assignment(s))
        except DomainError:
            continue
        assert lhs == rhs
        checked += 1


def test_criterion_06_derivative_vs_oracle():
    rng = random.Random(6)
    checked = 0
    while checked < 100:
        t = random_smooth_term(rng, 4, [X0, X1, X2])
        w = rng.choice(ordered_free_vars(t))
        s = Assignment({v: rng.uniform(-1.5, 1.5) for v in (X0, X1, X2)})
        try:
            numeric = fd_partial(t, w, s)
            symbolic = interpret(partial(t, w), s)
        except DomainError:
            continue
        # 1e-6 absolute floor for derivatives that vanish at s
        assert symbolic == pytest.approx(numeric, rel=1e-5, abs=1e-6)
        checked += 1


def test_criterion_07_mixed_partials_and_d3_sin_xy():
    t = parse("sin(x0*x1)")
    orders = [[X0, X1, X1], [X1, X0, X1], [X1, X1, X0]]
    mixed = []
    for order in orders:
        u = t
        for w in order:
            u = partial(u, w)
        mixed.append(u)
    assert all(semantic_equiv(mixed[0], m, GOLDEN_CFG) for m in mixed[1:])

    c = coefficient(iterated_differential(t, 3), DiffMonomial([DX0, DX1, DX1]))
    assert semantic_equiv(c, parse("3") * mixed[0], GOLDEN_CFG)
    rng = random.Random(7)
    for _ in range(10):
        s = Assignment({X0: rng.uniform(-1.5, 1.5), X1: rng.uniform(-1.5, 1.5)})
        numeric = fd_mixed_partial(t, {X0: 1, X1: 2}, s)
        assert interpret(c, s) == pytest.approx(3 * numeric, rel=1e-4)


def test_criterion_08_strong_differentiability_guard():
    t = App(pow_const(2), [App(ABS, [x(0)])])
    for attempt in (lambda: total_differential(t), lambda: iterated_differential(parse("abs(x0)^2"), 1),
                    lambda: partial(t, X0)):
        with pytest.raises(NotDifferentiable) as e:
            attempt()
        assert e.value.symbol == "abs"


def test_criterion_09_finite_calculus():
    grid = range(-5, 6)
    for f, g in [("x0^2", "x0^3"), ("1/(1 + x0^2)", "x0 + 1"), ("x0^3", "x0^2")]:
        verdict = check_delta_chain_rule(parse(f), X0, parse(g), grid)
        assert verdict, verdict
    for src in ("x0^3 - 2*x0 + 5", "3*x0^4 - x0^2", "x0", "7"):
        t = parse(src)
        d = delta(t, X0)
        for m in range(0, 8):
            total = sum(interpret(d, unit_step(X0, k)) for k in range(m))
            assert total == interpret(t, Assignment({X0: m})) - interpret(t, Assignment({X0: 0}))


def test_criterion_10_cli_round_trip():
    rng = random.Random(10)
    for _ in range(500):
        t = random_any_term(rng)
        text = to_text(t)
        assert parse(text) == t
        out = io.StringIO()
        # "--" keeps argparse from reading a leading minus as an option
        assert run(["parse", "--", text], out, io.StringIO()) == 0
        assert parse(out.getvalue().strip()) == t
    assert run(["equiv", "sin(x0+2*pi)", "sin(x0)"], io.StringIO(), io.StringIO()) == 0
