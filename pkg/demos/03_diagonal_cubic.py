# %% [markdown]
# # The cubic  l x^3 + l^2 y^3 + m z^3 + m^2 t^3 = 0
#
# Its 27 lines are written with a = l^(1/3), b = m^(1/3) and w a primitive
# cube root of unity.  Everything is exact: coefficients are polynomials in
# a, b over Z[w].

# %%
from e6verify import cubic, lattice as lat

lines = cubic.build_lines()
print(len(lines), "lines; all on the surface:", all(cubic.lies_on_cubic(l) for l in lines))
print(lines[0].label, lines[0].forms[0])

# %% [markdown]
# Incidence is decided by a 4x4 determinant.  Matching a sixer with
# E1..E6 identifies the concrete lines with the abstract classes.

# %%
meet = cubic.incidence()
print("meets per line:", sorted({int(d) for d in meet.sum(axis=1)}))
print("matching:", cubic.line_matching())

# %% [markdown]
# The Galois twists a -> wa and b -> wb, and the coordinate scalings,
# become elements of W(E6).

# %%
gl = cubic.substitution_perm("gamma_lambda")
gm = cubic.substitution_perm("gamma_mu")
g1 = cubic.embed_in_weyl(gl * gm)
s3 = cubic.embed_in_weyl(cubic.substitution_perm("sigma3"))
print("gamma_lambda*gamma_mu:", cubic.carter_type(g1).value, "fixing", g1.fixed_lines(), "lines")
print("sigma3:", cubic.carter_type(s3).value)

# %%
mats = [cubic.embed_in_weyl(g).matrix for g in (gl, gm)]
print("rank of Gamma-invariants:", lat.fixed_rank(mats))
print("rank with sigma3 added:", lat.fixed_rank(mats + [s3.matrix]))
