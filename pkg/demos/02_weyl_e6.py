# %% [markdown]
# # W(E6) as a permutation group on the 27 lines
#
# Six simple reflections generate the whole group; closing them up by
# breadth-first search gives all 51840 permutations.

# %%
import time

from e6verify import weyl

t0 = time.perf_counter()
W = weyl.build_weyl()
print(W, f"built in {time.perf_counter() - t0:.2f} s")
print("faithful on lines:", weyl.check_faithful())

# %% [markdown]
# Elements of order 3 fall into three classes, told apart by the rank of
# the sublattice they fix.

# %%
census = weyl.order3_census()
for t, row in census.items():
    print(f"{t:<10} count={row['count']:<4} fixed lines={row['fixed_lines']}  fixed rank={row['fixed_rank']}")

# %% [markdown]
# The 3-Sylow subgroup has order 81 and is a wreath product C3 wr C3.

# %%
from e6verify.perm import center, isomorphic_small, wreath_c3_c3

D = weyl.weyl_sylow3()
print("|Delta| =", D.order, " |Z(Delta)| =", center(D).order)
print("Delta = C3 wr C3:", isomorphic_small(D, wreath_c3_c3()))
