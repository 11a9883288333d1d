# %% [markdown]
# # Mixed partials hidden in d^3 sin(x0*x1)
#
# The monomials `dx0 dx1 dx1`, `dx1 dx0 dx1` and `dx1 dx1 dx0` are the same
# product, so their three copies of the mixed partial land in a single
# coefficient.

# %%
import random

from formaldiff import Assignment, NotDifferentiable, interpret, iterated_differential, mk_var, parse
from formaldiff.expansion import coefficient, expand
from formaldiff.oracle import fd_mixed_partial

x0, x1, dx0, dx1 = mk_var(0), mk_var(1), mk_var(0, 1), mk_var(1, 1)

# %%
t = parse("sin(x0*x1)")
poly = expand(iterated_differential(t, 3))
for m in poly.monomials():
    print(" ".join(map(str, m)))

# %%
c = coefficient(iterated_differential(t, 3), [dx0, dx1, dx1])
rng = random.Random(0)
for _ in range(5):
    s = Assignment({x0: rng.uniform(-1.5, 1.5), x1: rng.uniform(-1.5, 1.5)})
    ratio = interpret(c, s) / fd_mixed_partial(t, {x0: 1, x1: 2}, s)
    print(f"{ratio:.6f}")

# %% [markdown]
# `abs` has no derivative at 0, so differentiating through it is refused.

# %%
try:
    iterated_differential(parse("abs(x0)^2"), 1)
except NotDifferentiable as e:
    print("refused:", e)
