# %% [markdown]
# # Forward differences
#
# `delta` shifts `x0` by a formal step `Dx0` and subtracts.  Keeping the step
# symbolic matters once something is substituted for `x0`: the step must turn
# into the difference of the substituted term, while plain constants stay put.

# %%
from formaldiff import Assignment, interpret, mk_var, parse
from formaldiff.finite_calculus import check_delta_chain_rule, delta, delta_subst, unit_step

x0 = mk_var(0)

# %%
d = delta(parse("x0^2"), x0)
print(d)
print([interpret(d, unit_step(x0, k)) for k in range(-3, 4)])

# %%
print(delta_subst(parse("1/(1 + x0^2)"), x0, parse("x0^3")))
print(delta_subst(parse("Dx0"), x0, parse("x0^3")))

# %% [markdown]
# The difference chain rule holds exactly on an integer grid.

# %%
for f, g in [("x0^2", "x0^3"), ("1/(1 + x0^2)", "x0 + 1"), ("x0^3", "x0^2")]:
    print(f, g, check_delta_chain_rule(parse(f), x0, parse(g), range(-5, 6)))

# %% [markdown]
# Summing differences telescopes.

# %%
t = parse("x0^3 - 2*x0")
total = sum(interpret(delta(t, x0), unit_step(x0, k)) for k in range(10))
print(total, interpret(t, Assignment({x0: 10})) - interpret(t, Assignment({x0: 0})))
