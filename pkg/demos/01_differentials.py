# %% [markdown]
# # Differentials as variables
#
# Every precalculus variable `x0` comes with a tower of fresh variables
# `dx0`, `d^2 x0`, ...  The total differential of a term sums its partial
# derivatives against these, so `d` can be applied again to the result.

# %%
from formaldiff import iterated_differential, ordered_free_vars, parse, total_differential
from formaldiff.expansion import expand

# %% [markdown]
# `d` of a product that already contains a differential:

# %%
t = parse("x0*dx0")
print(total_differential(t))

# %% [markdown]
# Second differential of `x0^2`, collected by differential monomial.

# %%
print(expand(iterated_differential(parse("x0^2"), 2)))

# %% [markdown]
# The summands of `dT` follow the ordered free variables of `T`: lower
# differential order first, then lower index.

# %%
t = parse("exp(x1 + x3 + x2 + x2 + x99)*dx1*d^3 x1*dx2*d^50 x0")
print([str(v) for v in ordered_free_vars(t)])

# %%
for k in range(1, 4):
    print(k, expand(iterated_differential(parse("exp(x0)"), k)))
