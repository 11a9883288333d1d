# %% [markdown]
# # Substituting into differentials
#
# To plug `x0^2` into `d^2 exp(x0)` correctly, `dx0` has to become `d(x0^2)` and
# `d^2 x0` has to become `d^2(x0^2)`.  `subst_diff` builds that map lazily, up to
# the highest differential order that actually occurs.

# %%
from formaldiff import EquivConfig, iterated_differential, mk_var, parse, semantic_equiv
from formaldiff.expansion import coefficient
from formaldiff.substitution import check_chain_rule, extend, subst_diff

x0, dx0 = mk_var(0), mk_var(0, 1)

# %%
d2 = iterated_differential(parse("exp(x0)"), 2)
composed = subst_diff(d2, x0, parse("x0^2"))
print(composed)

# %% [markdown]
# The `dx0 dx0` row is the ordinary second derivative of `exp(x0^2)`.

# %%
c = coefficient(composed, [dx0, dx0])
print(c)

# %% [markdown]
# Differentiating after substituting gives the same function as substituting
# after differentiating.  The check samples both sides at random points.

# %%
print(check_chain_rule(parse("exp(x0)"), x0, parse("x0^2"), 2, EquivConfig()))
print(check_chain_rule(parse("sin(x0)"), x0, parse("x0*x1"), 3, EquivConfig()))

# %% [markdown]
# Replacing only `x0` and leaving `dx0` alone breaks the identity.

# %%
naive = extend({x0: parse("x0^2")}, iterated_differential(parse("exp(x0)"), 1))
right = iterated_differential(parse("exp(x0^2)"), 1)
print(semantic_equiv(naive, right))
