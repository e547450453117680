"""Fundamental groups of dimer complexes from two presentations."""
# %% [markdown]
# The pair presentation has a generator for each ordered pair of coverings and
# a relator for each flat triple. The edge-path presentation uses a spanning
# tree of the 1-skeleton and the boundary words of squares. Both give the same
# abelianization, and for theta graphs a free group of rank (n-1)(n-2)/2.

# %%
from dimerglide import (abelianization, dimer_complex, dimer_presentation, load_corpus,
                        pi1_spanning_tree, tietze_reduce)

for n in range(2, 7):
    x = dimer_complex(load_corpus(f"theta{n}"))
    base = x.states[0]
    pair = dimer_presentation(x, base)
    tree = pi1_spanning_tree(x, base)
    reduced = tietze_reduce(pair)
    print(f"theta{n}: pair {len(pair.generators)} gens -> {len(reduced.generators)} free gens; "
          f"tree {len(tree.generators)} gens; H1 {abelianization(pair)}")

# %%
x = dimer_complex(load_corpus("ladder"))
p = tietze_reduce(dimer_presentation(x, x.states[0]))
print("ladder:", p.generators, [p.word_str(r) for r in p.relators])
