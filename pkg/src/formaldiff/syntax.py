"""Surface syntax: a recursive-descent parser, a minimal-parenthesis printer,
and a JSON encoding of the term tree.

Grammar, loosest binding first::

    expr    := mulexpr (('+' | '-') mulexpr)*
    mulexpr := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' unary)?
    atom    := NUMBER | 'pi' | 'euler' | variable | NAME '(' expr (',' expr)* ')'
             | '(' expr ')'

Variables are ``x3``, ``dx3``, ``ddx3`` or ``d^2 x3``; difference variables
use ``D`` in place of ``d``.  A minus sign directly in front of a number
literal (and not followed by ``^``) is part of the literal.  A constant
exponent gives ``pow_const``; any other exponent gives the binary ``pow``.
"""

from __future__ import annotations

import math
import re

from .errors import ArityMismatch, ParseError, UnknownSymbol
from .registry import ADD, DIV, MUL, NEG, POW, REGISTRY, SUB, Registry, pow_const
from .terms import App, Const, Term, Var, Variable

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*'*)
  | (?P<op>[-+*/^(),])
    """,
    re.VERBOSE,
)
_PLAIN_VAR = re.compile(r"(d*|D*)x(\d+)$")


def tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", _offset(text, pos))
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), _offset(text, pos)))
        pos = m.end()
    tokens.append(("end", "", _offset(text, pos)))
    return tokens


def _offset(text, pos):
    return len(text[:pos].encode("utf-8"))


class _Parser:
    def __init__(self, text: str, registry: Registry):
        self.tokens = tokenize(text)
        self.i = 0
        self.registry = registry

    def peek(self, ahead=0):
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at(self, value, ahead=0):
        kind, text, _ = self.peek(ahead)
        return kind == "op" and text == value

    def expect(self, value):
        kind, text, off = self.peek()
        if not (kind == "op" and text == value):
            raise ParseError(f"expected {value!r}, found {text or 'end of input'!r}", off)
        self.take()

    def parse(self) -> Term:
        t = self.expr()
        kind, text, off = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", off)
        return t

    def expr(self):
        t = self.mulexpr()
        while self.at("+") or self.at("-"):
            op = self.take()[1]
            t = App(ADD if op == "+" else SUB, [t, self.mulexpr()])
        return t

    def mulexpr(self):
        t = self.unary()
        while self.at("*") or self.at("/"):
            op = self.take()[1]
            t = App(MUL if op == "*" else DIV, [t, self.unary()])
        return t

    def unary(self):
        if self.at("-"):
            if self.peek(1)[0] == "num" and not self.at("^", 2):
                self.take()
                return Const(-float(self.take()[1]))
            self.take()
            return App(NEG, [self.unary()])
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("^"):
            self.take()
            exponent = self.unary()
            if isinstance(exponent, Const):
                return App(pow_const(exponent.value), [base])
            return App(POW, [base, exponent])
        return base

    def atom(self):
        kind, text, off = self.peek()
        if kind == "num":
            self.take()
            return Const(float(text))
        if self.at("("):
            self.take()
            t = self.expr()
            self.expect(")")
            return t
        if kind != "name":
            raise ParseError(f"unexpected {text or 'end of input'!r}", off)
        self.take()
        if text in ("d", "D") and self.at("^"):
            self.take()
            k_kind, k_text, k_off = self.take()
            if k_kind != "num" or not k_text.isdigit():
                raise ParseError("expected a differential order", k_off)
            v_kind, v_text, v_off = self.take()
            m = re.fullmatch(r"x(\d+)", v_text) if v_kind == "name" else None
            if m is None:
                raise ParseError("expected a variable such as x0", v_off)
            return Var(Variable(int(m.group(1)), int(k_text), delta=text == "D"))
        if self.at("("):
            return self.call(text, off)
        m = _PLAIN_VAR.fullmatch(text)
        if m:
            prefix = m.group(1)
            return Var(Variable(int(m.group(2)), len(prefix), delta=prefix.startswith("D")))
        if text == "pi":
            return Const(math.pi)
        if text == "euler":
            return Const(math.e)
        raise UnknownSymbol(text)

    def call(self, name, off):
        self.expect("(")
        args = [self.expr()]
        while self.at(","):
            self.take()
            args.append(self.expr())
        self.expect(")")
        bare = name.rstrip("'")
        level = len(name) - len(bare)
        if level:
            if not self.registry.is_generic(bare):
                raise UnknownSymbol(name)
            fn = self.registry.generic(bare, level)
        else:
            fn = self.registry.get(name)
        if len(args) != fn.arity:
            raise ArityMismatch(
                f"{name} expects {fn.arity} argument(s), got {len(args)} (offset {off})"
            )
        return App(fn, args)


def parse(text: str, registry: Registry = REGISTRY) -> Term:
    return _Parser(text, registry).parse()


_ATOM, _POW, _UNARY, _MUL, _ADD = 5, 4, 3, 2, 1
_INFIX = {"add": (" + ", _ADD), "sub": (" - ", _ADD), "mul": ("*", _MUL), "div": ("/", _MUL)}


def format_number(v: float) -> str:
    if v == math.pi:
        return "pi"
    if v == math.e:
        return "euler"
    if v.is_integer() and abs(v) < 1e15:
        return str(int(v))
    return repr(v)


def _render(t: Term, registry: Registry):
    if isinstance(t, Const):
        s = format_number(t.value)
        return s, (_UNARY if s.startswith("-") else _ATOM)
    if isinstance(t, Var):
        return str(t.var), _ATOM
    fn = t.fn
    if fn.name in _INFIX and fn in (ADD, SUB, MUL, DIV) and not fn.params:
        op, prec = _INFIX[fn.name]
        left = _wrap(t.args[0], prec, registry)
        right = _wrap(t.args[1], prec + 1, registry)
        return f"{left}{op}{right}", prec
    if fn == NEG:
        arg = t.args[0]
        s, p = _render(arg, registry)
        if (isinstance(arg, Const) and not s.startswith("-")) or p < _UNARY:
            s = f"({s})"
        return "-" + s, _UNARY
    if fn.name == "pow_const" and fn.params:
        return f"{_wrap(t.args[0], _POW + 1, registry)}^{format_number(fn.params[0])}", _POW
    if fn == POW and not isinstance(t.args[1], Const):
        base = _wrap(t.args[0], _POW + 1, registry)
        return f"{base}^{_wrap(t.args[1], _UNARY, registry)}", _POW
    name = fn.name
    if registry.is_generic(name) and fn.params:
        name += "'" * fn.params[0]
    args = ", ".join(_render(a, registry)[0] for a in t.args)
    return f"{name}({args})", _ATOM


def _wrap(t, min_prec, registry):
    s, p = _render(t, registry)
    return f"({s})" if p < min_prec else s


def to_text(t: Term, registry: Registry = REGISTRY) -> str:
    """Render ``t`` with the fewest parentheses that still parse back to ``t``."""
    return _render(t, registry)[0]


def to_json(t: Term) -> dict:
    if isinstance(t, Const):
        return {"kind": "const", "value": t.value}
    if isinstance(t, Var):
        node = {"kind": "var", "base": t.var.base, "order": t.var.order}
        if t.var.delta:
            node["delta"] = True
        return node
    node = {"kind": "app", "fn": t.fn.name, "args": [to_json(a) for a in t.args]}
    if t.fn.params:
        node["params"] = list(t.fn.params)
    return node


def from_json(node: dict, registry: Registry = REGISTRY) -> Term:
    kind = node.get("kind")
    if kind == "const":
        return Const(node["value"])
    if kind == "var":
        return Var(Variable(int(node["base"]), int(node["order"]), bool(node.get("delta", False))))
    if kind == "app":
        name = node["fn"]
        params = node.get("params")
        if name == "pow_const":
            fn = pow_const(params[0])
        elif params and registry.is_generic(name):
            fn = registry.generic(name, int(params[0]))
        else:
            fn = registry.get(name)
        return App(fn, [from_json(a, registry) for a in node["args"]])
    raise ValueError(f"unknown node kind {kind!r}")
