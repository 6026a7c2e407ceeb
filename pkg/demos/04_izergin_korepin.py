# %% [markdown]
# # The Izergin-Korepin determinant
#
# det(1/((x_i+y_j)(a x_i+y_j))), suitably normalized, equals a sum over
# ASMs (through their six-vertex pictures) of products of local weights.
# Everything is checked at exact random rational points.

# %%
import random

from asm_identities import ik

p = ik.sample_point(random.Random(0), 3)
print(p)
print(ik.ik_lhs(p) == ik.ik_rhs(p))

# %% [markdown]
# At a = 1 the determinant becomes Borchardt's determinant of squares,
# which relates to a permanent.  Without the a factor it reduces to
# Cauchy's determinant.

# %%
print(ik.borchardt_sides(ik.make_point(1, [1, 2], [3, 5])))
print(ik.check_cauchy(6, trials=5).summary())

# %% [markdown]
# In a, the ASM side is a polynomial of degree n(n-1).  Its leading
# coefficient comes only from the anti-diagonal permutation.

# %%
print(ik.check_ik_degree(4).summary())

# %% [markdown]
# The product formula for the number of ASMs, from small to large n.

# %%
print([ik.asm_count_formula(n) for n in range(1, 11)])
