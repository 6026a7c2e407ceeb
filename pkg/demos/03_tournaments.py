# %% [markdown]
# # Tournaments and weighted ASMs
#
# Expanding prod_{i<j} (x_i + lam x_j) term by term enumerates tournaments
# on n players: lam counts upsets and x_i counts wins.  The same polynomial
# is a sum over ASMs with weights lam^(I-N) (1+lam)^N.

# %%
from math import comb

from asm_identities import tournaments as tn

print(tn.product_side(3))
print(tn.tournament_side_eq6(3) == tn.asm_side_eq6(3))

# %% [markdown]
# The (1+lam)^N factor has 2^N terms.  Giving each -1 entry a left/right
# choice turns the weighted ASM side into a set of the same size as the
# tournament set.

# %%
for n in range(1, 6):
    rows = tn.audit_eq6(n)
    total = sum(r.decorated_asm_count for r in rows)
    print(n, total, 2 ** comb(n, 2), all(r.balanced for r in rows))

# %% [markdown]
# The audit table lists, per monomial, how many tournaments and how many
# decorated ASMs it collects.  Any bijection between the two sets has to
# preserve these counts.

# %%
print(tn.audit_to_csv(tn.audit_eq6(3)))
