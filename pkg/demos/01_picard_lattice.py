# %% [markdown]
# # Lines and roots in the Picard lattice of a cubic surface
#
# The lattice Z^{1,6} has basis L, E1..E6 with L.L = 1, Ei.Ei = -1.
# Lines are classes with v.v = v.K = -1; roots have r.r = -2, r.K = 0.

# %%
from collections import Counter

from e6verify import lattice as lat

K = lat.canonical_class()
print("K =", K.coords, " K.K =", lat.pairing(K, K))

# %%
lines = lat.enumerate_lines()
roots = lat.enumerate_roots()
print(len(lines), "lines,", len(roots), "roots")
for v in lines[:7]:
    print("  ", v.coords)

# %% [markdown]
# Every line meets 10 others and is disjoint from 16.

# %%
row = Counter(lat.pairing(lines[0], v) for v in lines)
print(dict(row))

# %% [markdown]
# Reflections in roots are isometries fixing K.  A single reflection fixes a
# rank-6 sublattice.

# %%
r = lat.exceptional_class(1) - lat.exceptional_class(2)
m = lat.reflection_matrix(r)
print(m)
print("isometry:", lat.is_isometry(m), " fixed rank:", lat.fixed_rank([m]))
