"""Formal differential variables, iterated differentials and an executable
higher-order chain rule."""

from .errors import (
    ArityMismatch,
    DomainError,
    FormalDiffError,
    MixedVariables,
    NotDifferentiable,
    NotPolynomialInDifferentials,
    OrderNotZero,
    ParseError,
    TooLarge,
    UnknownSymbol,
)
from .registry import REGISTRY, Registry, pow_const
from .terms import (
    App,
    Const,
    FunctionSymbol,
    Term,
    Var,
    Variable,
    d_var,
    delta_var,
    dx,
    free_vars,
    is_strongly_differentiable,
    mk_var,
    ordered_free_vars,
    subterms,
    x,
)
from .semantics import Assignment, EquivConfig, Verdict, interpret, semantic_equiv, shift
from .derivative import (
    SimplifyPolicy,
    iterated_differential,
    partial,
    simplify,
    total_differential,
)
from .syntax import from_json, parse, to_json, to_text

__version__ = "0.1.0"

__all__ = [
    "App",
    "ArityMismatch",
    "Assignment",
    "Const",
    "d_var",
    "delta_var",
    "DomainError",
    "dx",
    "EquivConfig",
    "FormalDiffError",
    "free_vars",
    "from_json",
    "FunctionSymbol",
    "interpret",
    "is_strongly_differentiable",
    "iterated_differential",
    "MixedVariables",
    "mk_var",
    "NotDifferentiable",
    "NotPolynomialInDifferentials",
    "ordered_free_vars",
    "OrderNotZero",
    "parse",
    "ParseError",
    "partial",
    "pow_const",
    "REGISTRY",
    "Registry",
    "semantic_equiv",
    "shift",
    "simplify",
    "SimplifyPolicy",
    "subterms",
    "Term",
    "to_json",
    "to_text",
    "TooLarge",
    "total_differential",
    "UnknownSymbol",
    "Var",
    "Variable",
    "Verdict",
    "x",
]
