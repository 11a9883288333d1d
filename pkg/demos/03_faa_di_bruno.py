# %% [markdown]
# # Higher derivatives of compositions from set partitions
#
# Each set partition of `{1, ..., n}` contributes one product to `d^n f(x)`.
# Substituting `g(x)` and reading off the `(dx)^n` row gives the n-th
# derivative of `f(g(x))`.

# %%
import math

from formaldiff import Assignment, interpret, mk_var
from formaldiff.expansion import expand
from formaldiff.faa_di_bruno import faa_nth_derivative, partition_sum, partitions
from formaldiff.oracle import fd_nth_composition

x0 = mk_var(0)

# %%
for pi in partitions(3):
    print(pi, pi.block_sizes())

# %%
print([sum(1 for _ in partitions(n)) for n in range(1, 8)])

# %% [markdown]
# With a generic `f` the multiplicities show up in the coefficients.

# %%
print(expand(partition_sum("f", x0, 3)))

# %% [markdown]
# Fourth derivative of `exp(x0^2)`, symbolic against finite differences.

# %%
t = faa_nth_derivative("exp", "square", 4)
for point in (-1.0, 0.3, 1.2):
    symbolic = interpret(t, Assignment({x0: point}))
    numeric = fd_nth_composition(math.exp, lambda v: v * v, 4, point)
    print(f"{point:5.2f} {symbolic:14.6f} {numeric:14.6f}")
