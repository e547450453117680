"""Dimer coverings and the cube complexes they span."""
# %% [markdown]
# A dimer covering picks one edge at every vertex. Two coverings are joined by
# an edge of the complex when they differ along a single even cycle, and
# coverings that differ along several disjoint cycles span higher cubes.

# %%
from dimerglide import dimer_complex, enumerate_dimer_coverings, load_corpus

for name in ("C3", "C4", "C6", "theta4", "C4_C4", "theta3_C4", "ladder"):
    h = load_corpus(name)
    x = dimer_complex(h)
    print(f"{name:10s} coverings={len(enumerate_dimer_coverings(h)):2d} "
          f"f-vector={x.f_vector()} euler={x.euler()}")

# %% [markdown]
# The theta graph with n parallel edges has n coverings and every pair of them
# differs along one 2-cycle, so its complex is the complete graph on n vertices.

# %%
x = dimer_complex(load_corpus("theta5"))
h = x.hypergraph
for a, b, g in x.edges():
    print(h.edge_names(a), "--", h.edge_names(b), "via glide", g)

# %% [markdown]
# Disjoint unions multiply: the square below is the product of two segments.

# %%
print(dimer_complex(load_corpus("C4_C4")).to_dot())
