# %% [markdown]
# # The affine plane over F_3
#
# Nine points, twelve lines, four lines through each point.  Its symmetry
# group GA_2(F_3) has order 432.

# %%
from e6verify import ag23

g = ag23.enumerate_ga23()
print(g)
for l in ag23.configuration_lines():
    print([ag23.POINTS[p] for p in l])

# %% [markdown]
# A subgroup with no order-3 element is a 2-group, and 2-groups acting on
# 9 points always fix one.  Check it over all 2-subgroups.

# %%
r = ag23.verify_lemma_gaff()
print({k: v for k, v in r.items()})
