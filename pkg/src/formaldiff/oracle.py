"""Finite-difference ground truth for the symbolic routes.

All estimates use central difference stencils refined by Richardson
extrapolation.  The stencil is evaluated at steps ``h, 2h, 4h, ...`` so the
smallest step (and therefore the rounding error) is fixed by ``h``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from math import comb
from typing import Callable, Mapping

from .errors import DomainError
from .semantics import Assignment, interpret
from .terms import Term, Variable

EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class FDConfig:
    step: float = 1e-5
    scheme: str = "central"
    richardson_levels: int = 2

    def __post_init__(self):
        if not self.step > 0:
            raise ValueError("step must be positive")
        if self.scheme != "central":
            raise ValueError("only the central scheme is supported")
        if not 0 <= self.richardson_levels <= 4:
            raise ValueError("richardson_levels must be between 0 and 4")

    def step_for(self, order: int, scale: float = 1.0) -> float:
        """``step`` for first derivatives, ``eps**(1/(order+2))`` (scaled) beyond."""
        if order <= 1:
            return self.step
        return EPS ** (1.0 / (order + 2)) * max(1.0, abs(scale))


def _stencil(order: int):
    """Offsets (in units of h) and weights of the order-``order`` central difference."""
    return [(order / 2 - i, (-1) ** i * comb(order, i)) for i in range(order + 1)]


def _richardson(estimate: Callable[[float], float], h: float, levels: int) -> float:
    # estimate(h) = exact + c1 h^2 + c2 h^4 + ...
    col = [estimate(h * 2**j) for j in range(levels + 1)]
    for i in range(1, levels + 1):
        f = 4**i
        col = [(f * col[j] - col[j + 1]) / (f - 1) for j in range(len(col) - 1)]
    return col[0]


def fd_mixed_partial(t: Term, counts: Mapping[Variable, int], s: Assignment,
                     cfg: FDConfig | None = None) -> float:
    """Numeric ``d^n T / prod_w dw^counts[w]`` at ``s`` via a product stencil."""
    cfg = cfg or FDConfig()
    counts = {w: k for w, k in counts.items() if k}
    order = sum(counts.values())
    if order == 0:
        return interpret(t, s)
    scale = max((abs(s(w)) for w in counts), default=1.0)
    h = cfg.step_for(order, scale)
    axes = [(w, _stencil(k)) for w, k in counts.items()]

    def estimate(step):
        total = 0.0

        def rec(i, point, weight):
            nonlocal total
            if i == len(axes):
                total += weight * interpret(t, point)
                return
            w, stencil = axes[i]
            for offset, c in stencil:
                rec(i + 1, point.shift(w, s(w) + offset * step), weight * c)

        rec(0, s, 1.0)
        return total / step**order

    try:
        return _richardson(estimate, h, cfg.richardson_levels)
    except DomainError as e:
        raise DomainError(f"stencil left the domain: {e}") from None


def fd_partial(t: Term, w: Variable, s: Assignment, cfg: FDConfig | None = None) -> float:
    """Central-difference estimate of the limit ``(T^{s(w|s(w)+h)} - T^s) / h``."""
    return fd_mixed_partial(t, {w: 1}, s, cfg)


def fd_nth_composition(f: Callable[[float], float], g: Callable[[float], float], n: int,
                       x0: float, cfg: FDConfig | None = None) -> float:
    """Numeric ``n``-th derivative of ``f(g(x))`` at ``x0`` (``n <= 4``)."""
    cfg = cfg or FDConfig()
    if not 0 <= n <= 4:
        raise ValueError("n must be between 0 and 4")

    def F(t):
        try:
            return f(g(t))
        except (ArithmeticError, ValueError) as e:
            raise DomainError(str(e)) from None

    if n == 0:
        return F(x0)
    stencil = _stencil(n)

    def estimate(step):
        return sum(c * F(x0 + off * step) for off, c in stencil) / step**n

    return _richardson(estimate, cfg.step_for(n, x0), cfg.richardson_levels)
