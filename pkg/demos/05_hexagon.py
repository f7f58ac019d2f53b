# %% [markdown]
# # The hexagon of a degree-6 del Pezzo surface

# %%
from e6verify import dp6, lattice as lat
from e6verify.perm import centralizer

cs, adj = dp6.hexagon()
for v in cs:
    print(v.coords)
print(adj)

# %%
g = dp6.symmetry_group()
z = dp6.central_involution(g)
print("order", g.order, " central involution", z)
print("disjoint triples", dp6.disjoint_triples())

# %%
for gamma in g:
    if gamma.order() == 3:
        c = centralizer(g, gamma)
        print(gamma, "centralizer order", c.order, " fixed rank", lat.fixed_rank([dp6.matrix_for(gamma)]))
