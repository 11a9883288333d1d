import io
import json
import subprocess
import sys

import pytest

from formaldiff import parse, semantic_equiv
from formaldiff.cli import parse_monomial, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue().strip(), err.getvalue().strip()


def test_d():
    assert call("d", "exp(x0)", "-k", "2") == (0, "exp(x0)*dx0*dx0 + exp(x0)*d^2 x0", "")
    assert call("d", "x0^2", "-k", "2")[1] == "2*dx0*dx0 + 2*x0*d^2 x0"
    code, out, _ = call("d", "x0*x1", "--raw")
    assert code == 0 and semantic_equiv(parse(out), parse("x1*dx0 + x0*dx1"))


def test_parse_and_json():
    assert call("parse", "x0*dx1 + x1*dx0")[1] == "x0*dx1 + x1*dx0"
    code, out, _ = call("parse", "--json", "ddx0")
    assert code == 0 and json.loads(out) == {"kind": "var", "base": 0, "order": 2}


def test_partial_and_subst():
    assert call("partial", "-w", "x1", "x0*x1^2")[1] == "x0*(2*x1)"
    code, out, _ = call("subst", "-v", "x0", "-u", "x0*x1", "dx0")
    assert code == 0 and semantic_equiv(parse(out), parse("x1*dx0 + x0*dx1"))


def test_coeff_pipeline():
    code, out, _ = call("coeff", "-m", "dx0 dx0", "-k", "2", "exp(x0^2)")
    assert code == 0 and semantic_equiv(parse(out), parse("(4*x0^2+2)*exp(x0^2)"))
    assert call("coeff", "-m", "dx0", "x0")[1] == "0"


def test_expand_rows():
    code, out, _ = call("expand", "--rows", "x0*dx0*dx0 + 3 + dx0*x0*dx0")
    assert code == 0
    assert out.splitlines() == ["1: 3", "dx0 dx0: x0 + x0"]


def test_equiv_exit_codes():
    assert call("equiv", "sin(x0+2*pi)", "sin(x0)")[0] == 0
    assert call("equiv", "x0", "x1")[0] == 1
    assert call("equiv", "ln(-1-x0^2)", "0")[0] == 1


def test_faa():
    code, out, _ = call("faa", "-n", "2", "-f", "exp", "-g", "square")
    assert code == 0 and semantic_equiv(parse(out), parse("(4*x0^2+2)*exp(x0^2)"))
    code, out, _ = call("faa", "-n", "3", "--sum")
    assert code == 0 and out.count("f") == 5


def test_delta_commands():
    assert call("delta", "x0^2")[1] == "(x0 + Dx0)^2 - x0^2"
    assert call("delta-chain", "-f", "x0^2", "-g", "x0^3", "--grid", "-5", "5")[0] == 0


def test_check_chain():
    assert call("check-chain", "-T", "exp(x0)", "-v", "x0", "-u", "x0^2", "-k", "2")[0] == 0


@pytest.mark.parametrize("argv", [
    ["d", "abs(x0)^2"],
    ["parse", "x0 +"],
    ["parse", "tan(x0)"],
    ["subst", "-v", "dx0", "-u", "x1", "x0"],
    ["coeff", "-m", "dx0 + 1", "x0"],
    ["faa", "-n", "11"],
    ["nope"],
    [],
])
def test_errors_exit_two(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""


def test_error_message_is_one_line():
    code, _, err = call("d", "abs(x0)^2")
    assert code == 2 and err.startswith("formaldiff: error:") and "\n" not in err
    assert "abs" in err


def test_leading_minus_needs_separator():
    assert call("parse", "--", "-(x0)^2")[:2] == (0, "-x0^2")
    assert call("parse", "-2")[:2] == (0, "-2")


def test_parse_monomial():
    assert len(parse_monomial("dx0 dx0 d^2 x1")) == 3
    assert len(parse_monomial("1")) == 0


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "formaldiff", "equiv", "sin(x0+2*pi)", "sin(x0)"],
                       capture_output=True, text=True)
    assert p.returncode == 0
