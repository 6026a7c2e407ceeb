# %% [markdown]
# # The a = -1 identity as a polynomial identity
#
# At a = -1 the weights become linear forms in x and y with no division.
# The identity can then be checked exactly in Q[x1..xn, y1..yn], with no
# random sampling.  The left side factors as a product of a sum over
# row statistics and a sum over column statistics.

# %%
from asm_identities import ik

print(ik.eq11_lhs(2))
print(ik.eq11_rhs(2))

# %% [markdown]
# Both sides are compared with prod_{i<j} (x_i+x_j)(y_i+y_j).  The
# normalization that makes this work is found by exhaustive search at
# n = 1 and n = 2, then frozen.

# %%
chosen, matching = ik.resolve_eq11_normalization()
print(chosen.describe())
for c in matching:
    print("  also:", c.describe())

# %%
rep = ik.check_eq11(4, trials=2)
print(rep.summary())
print(rep.notes)
