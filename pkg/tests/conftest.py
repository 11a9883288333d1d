import pytest
from hypothesis import settings, strategies as st

from formaldiff import App, Const, Var, Variable
from formaldiff.registry import ABS, ADD, COS, EXP, IDENTITY, MUL, NEG, SIN, SUB, pow_const

settings.register_profile("default", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("default")

X0, X1, X2 = Variable(0), Variable(1), Variable(2)
DX0, DX1, DDX0 = Variable(0, 1), Variable(1, 1), Variable(0, 2)

PRECALC = [X0, X1, X2]
MIXED = [X0, X1, X2, DX0, DX1, DDX0]

UNARY = [NEG, EXP, SIN, COS, pow_const(2), pow_const(3), IDENTITY]
BINARY = [ADD, SUB, MUL]


def term_strategy(variables, max_leaves=10, unary=UNARY):
    leaves = st.one_of(
        st.sampled_from(variables).map(Var),
        st.sampled_from([-2.0, -1.0, 0.5, 1.0, 2.0, 3.0]).map(Const),
    )

    def grow(children):
        return st.one_of(
            st.builds(lambda f, a: App(f, [a]), st.sampled_from(unary), children),
            st.builds(lambda f, a, b: App(f, [a, b]), st.sampled_from(BINARY), children, children),
        )

    return st.recursive(leaves, grow, max_leaves=max_leaves)


smooth_terms = term_strategy(PRECALC)
mixed_terms = term_strategy(MIXED)
rough_terms = term_strategy(MIXED, unary=UNARY + [ABS])


@pytest.fixture
def rng():
    import random

    return random.Random(12345)


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.outcome == "failed":
        _acceptance[report.nodeid] = "failed"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _acceptance.items():
        name = nodeid.split("::")[-1]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
