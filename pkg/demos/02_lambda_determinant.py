# %% [markdown]
# # The lambda-determinant
#
# Condensation computes a determinant from contiguous minors:
# D(M) D(central) = D(TL) D(BR) - D(TR) D(BL).  Replacing the minus sign by
# "+ lam" defines the lambda-determinant.  It expands as a sum over ASMs
# with weight lam^(I-N) (1+lam)^N times prod m_ij^a_ij.

# %%
from fractions import Fraction

from asm_identities import lambda_det as ld
from asm_identities.arith import interpolate

M = [[2, 3, 5], [7, 11, 13], [17, 19, 23]]
for lam in (-1, 0, 1, Fraction(1, 2)):
    print(lam, ld.lambda_det_condense(M, lam), ld.lambda_det_asm_sum(M, lam))

# %% [markdown]
# At lam = -1 this is the ordinary determinant.  The lambda-determinant
# has degree 3 in lam for a 3x3 matrix; interpolation shows the
# coefficients, including the b d f h / e contribution of the ASM with a
# central -1.

# %%
coeffs = interpolate(range(5), [ld.lambda_det_condense(M, t) for t in range(5)])
for k, c in enumerate(coeffs):
    print(f"lam^{k}: {c}")

# %% [markdown]
# For the matrix (x_i^(n-j)) the lambda-determinant factors as
# prod_{i<j} (x_i + lam x_j).

# %%
print(ld.check_prop1(5, trials=10, seed=0).summary())
print(ld.check_prop2(5, trials=10, seed=0).summary())

# %% [markdown]
# Because the ASM sum is defined without division, the recursion can be
# checked with every factor taken from the ASM side.

# %%
rep = ld.check_problem1(4, trials=10, seed=0)
print(rep.summary())
print(rep.notes)
