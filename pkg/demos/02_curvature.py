"""Checking nonpositive curvature two ways."""
# %% [markdown]
# For a set of states in a gliding system, the combinatorial conditions
# (regularity and the 3-cube condition) should agree with the geometric ones
# (simple links that are flag complexes). Seven corners of a cube make the
# smallest set where both fail.

# %%
from itertools import combinations

from dimerglide import GlidingSystem, npc_verdict

sys_ = GlidingSystem([0b1111, 0b1111 << 4, 0b1111 << 8])
corners = [sys_.product(ids) for r in range(3) for ids in combinations(range(3), r)]
report = npc_verdict(sys_, corners)
print("seven corners:", report.to_dict())
print("witness (state, clique of the link):", report.violation)

# %%
full = corners + [sys_.product([0, 1, 2])]
print("eight corners:", npc_verdict(sys_, full).to_dict())

# %% [markdown]
# Dimer complexes always pass.

# %%
from dimerglide import load_corpus
from dimerglide.dimer import dimer_states, dimer_system

for name in ("ladder", "theta3_C4", "exact_cover3"):
    h = load_corpus(name)
    print(name, npc_verdict(dimer_system(h), dimer_states(h)).npc)
