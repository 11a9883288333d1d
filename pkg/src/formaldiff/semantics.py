"""Assignments, interpretation and sampled semantic equivalence."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .errors import DomainError
from .terms import Const, Term, Var, Variable


class Assignment:
    """A total map from variables to reals: explicit bindings plus a default."""

    __slots__ = ("_bindings", "default")

    def __init__(self, bindings: Mapping[Variable, float] | None = None, default: float = 0.0):
        self._bindings = MappingProxyType(
            {v: float(r) for v, r in (bindings or {}).items()}
        )
        self.default = float(default)

    @property
    def bindings(self) -> Mapping[Variable, float]:
        return self._bindings

    def __call__(self, v: Variable) -> float:
        return self._bindings.get(v, self.default)

    def shift(self, w: Variable, r: float) -> "Assignment":
        """``s(w|r)``: agrees with ``self`` except that ``w`` maps to ``r``."""
        b = dict(self._bindings)
        b[w] = r
        return Assignment(b, self.default)

    def agrees_with(self, other: "Assignment", variables) -> bool:
        return all(self(v) == other(v) for v in variables)

    def __repr__(self):
        inner = ", ".join(f"{v}: {r!r}" for v, r in sorted(
            self._bindings.items(), key=lambda kv: kv[0].sort_key()))
        return f"Assignment({{{inner}}}, default={self.default!r})"


def shift(s: Assignment, w: Variable, r: float) -> Assignment:
    return s.shift(w, r)


def interpret(t: Term, s: Assignment) -> float:
    """Evaluate ``t`` under ``s``; raises :class:`DomainError` off a primitive's domain."""
    cache = {}

    def go(u):
        if isinstance(u, Const):
            return u.value
        if isinstance(u, Var):
            return s(u.var)
        key = id(u)
        if key in cache:
            return cache[key]
        vals = [go(a) for a in u.args]
        try:
            r = u.fn.eval(*vals)
        except DomainError:
            raise
        except (ArithmeticError, ValueError) as e:
            raise DomainError(f"{u.fn.name}{tuple(vals)}: {e}") from None
        if isinstance(r, complex) or not math.isfinite(r):
            raise DomainError(f"{u.fn.name}{tuple(vals)} is not a finite real")
        cache[key] = r
        return r

    return go(t)


@dataclass(frozen=True)
class EquivConfig:
    samples: int = 100
    tolerance: float = 1e-9
    range: tuple = (-2.0, 2.0)
    seed: int = 0
    abs_floor: float = 1e-12
    retries: int = 10

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.tolerance < 0:
            raise ValueError("tolerance must be nonnegative")
        lo, hi = self.range
        if not lo < hi:
            raise ValueError("sampling range must be a nonempty interval")


EQUIVALENT = "equivalent"
COUNTEREXAMPLE = "counterexample"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a sampled check.  Truthy only when nothing was refuted or skipped."""

    status: str
    assignment: Assignment | None = None
    values: tuple | None = None
    detail: str = ""
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def equivalent(self) -> bool:
        return self.status == EQUIVALENT

    def __bool__(self):
        return self.equivalent

    def __str__(self):
        if self.status == COUNTEREXAMPLE:
            return f"counterexample: {self.assignment!r} gives {self.values!r} {self.detail}".rstrip()
        if self.detail:
            return f"{self.status}: {self.detail}"
        return self.status


def close_enough(a: float, b: float, tolerance: float, abs_floor: float = 1e-12) -> bool:
    return abs(a - b) <= max(tolerance * max(abs(a), abs(b)), abs_floor)


def semantic_equiv(t: Term, u: Term, cfg: EquivConfig | None = None) -> Verdict:
    """Compare ``t`` and ``u`` on ``cfg.samples`` seeded random assignments.

    Samples where either side leaves its domain are redrawn up to
    ``cfg.retries`` times; if more than half the samples never evaluate the
    verdict is inconclusive.
    """
    cfg = cfg or EquivConfig()
    variables = sorted(t.free_vars | u.free_vars, key=Variable.sort_key)
    rng = random.Random(cfg.seed)
    lo, hi = cfg.range
    failed = 0
    for _ in range(cfg.samples):
        for _attempt in range(cfg.retries + 1):
            s = Assignment({v: rng.uniform(lo, hi) for v in variables})
            try:
                a = interpret(t, s)
                b = interpret(u, s)
            except DomainError:
                continue
            break
        else:
            failed += 1
            continue
        if not close_enough(a, b, cfg.tolerance, cfg.abs_floor):
            rel = abs(a - b) / max(abs(a), abs(b), 1e-300)
            return Verdict(COUNTEREXAMPLE, s, (a, b), f"(relative error {rel:.3g})")
    stats = {"samples": cfg.samples, "domain_failures": failed}
    if failed * 2 > cfg.samples:
        return Verdict(INCONCLUSIVE, detail=f"{failed}/{cfg.samples} samples left the domain",
                       stats=stats)
    return Verdict(EQUIVALENT, stats=stats)
