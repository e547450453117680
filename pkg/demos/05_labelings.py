"""Points of the complex as fractional edge labelings."""
# %% [markdown]
# A point inside a cube gives every edge a weight in [0, 1], with weights
# summing to 1 at each vertex. Odd cycles contribute extra components where
# their edges all sit at 1/2.

# %%
from fractions import Fraction

from dimerglide import ComplexPoint, dimer_complex, evaluate, labeling_components, load_corpus
from dimerglide.dimer import labeling_by_name

h = load_corpus("C4")
x = dimer_complex(h)
edge = x.cubes_by_dim[1][0]
for t in (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1)):
    print(t, labeling_by_name(h, evaluate(x.system, ComplexPoint(edge.base, edge.glides, (t,)))))

# %%
for name in ("C3", "C4", "C3_C4", "C5_C4"):
    g = load_corpus(name)
    for comp in labeling_components(g):
        odd = [g.edge_names(c.edges) for c in comp.odd_cycles]
        print(name, "odd cycles at 1/2:", odd, "complex f-vector:", comp.complex.f_vector())
