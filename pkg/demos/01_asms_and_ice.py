# %% [markdown]
# # Alternating sign matrices and square ice
#
# An alternating sign matrix (ASM) has entries in {-1, 0, 1}; every row and
# column sums to 1 and the nonzero entries alternate in sign.  Each ASM is
# also a configuration of the six-vertex model: +1 becomes an H vertex, -1 a
# V vertex, and a zero becomes one of NE/SW/NW/SE depending on the row and
# column prefix sums at that cell.

# %%
import numpy as np

from asm_identities import asm

A = asm.validate([
    [0, 1, 0, 0, 0],
    [1, -1, 0, 1, 0],
    [0, 1, 0, -1, 1],
    [0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0],
])
print(A.array)

# %% [markdown]
# Prefix sums decide the zero cells: (r, c) = (0,0) is NE, (1,1) SW,
# (0,1) SE and (1,0) NW.

# %%
r, c = asm.prefix_sums(A)
print("row prefix sums\n", r)
print("column prefix sums\n", c)
cfg = asm.to_six_vertex(A)
print(cfg)

# %% [markdown]
# The map is a bijection: reading back H and V recovers the matrix, and
# a grid whose zero cells disagree with its H/V pattern is rejected.

# %%
assert asm.from_six_vertex(cfg) == A
print(asm.stats(A).to_json())

# %% [markdown]
# Vertex counts are tied to the inversion number I and the number N of -1
# entries: #SW = #NE = I - N and #SE = #NW = C(n,2) - I.

# %%
for claim in asm.check_prop3(A).details["claims"]:
    print(claim)

# %% [markdown]
# Enumeration runs a row-by-row search over column prefix states.  The
# counts follow 1, 2, 7, 42, 429, ...

# %%
for n in range(1, 8):
    print(n, sum(1 for _ in asm.enumerate_asms(n)))

# %% [markdown]
# Inversion number and -1 count across all 42 ASMs of order 4, as a table.

# %%
table = np.zeros((7, 3), dtype=int)
for B in asm.all_asms(4):
    table[asm.inversion_number(B), asm.count_neg_ones(B)] += 1
print("rows: inversion number 0..6, columns: N = 0, 1, 2")
print(table)
