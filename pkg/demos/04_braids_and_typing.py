"""Mark transport along loops and the typing word."""
# %% [markdown]
# Mark the edges of a covering 1..N. Gliding along an even cycle pushes each
# marked edge through its vertex in a chosen vertex half. Going round a loop
# returns the covering with its marks permuted.

# %%
from dimerglide import braid_permutation, cycle_notation, dimer_complex, load_corpus, one_line
from dimerglide import theta_n_permutation
from dimerglide.formats import load_corpus_json, parse_loop, parse_vhalves

x = dimer_complex(load_corpus("ladder"))
loop = parse_loop(x.system, load_corpus_json("ladder_loop"))
for name in ("ladder_vhalves", "ladder_vhalves_flipped"):
    vo = parse_vhalves(x.system, load_corpus_json(name))
    p = braid_permutation(x.system, loop, vo)
    print(f"{name}: {one_line(p)} = {cycle_notation(p)}")

# %% [markdown]
# Subdividing an edge twice adds a mark; the loop is carried over canonically.

# %%
vo = parse_vhalves(x.system, load_corpus_json("ladder_vhalves"))
for profile in ({}, {"ad": 1}, {"ad": 1, "cf": 1}, {"bc": 2}):
    print(profile, one_line(theta_n_permutation(x.system, loop, profile, vo)))

# %% [markdown]
# The typing word records which cycles were glided and in which direction.
# Its image in the edge group is trivial for every loop.

# %%
import random

from dimerglide import Orientation, artin_group, random_loop
from dimerglide.raag import typing_identity

halves = Orientation.canonical(x.system)
a = artin_group(x.system)
rng = random.Random(1)
for _ in range(4):
    lp = random_loop(x, x.states[0], rng)
    mu, image, ok = typing_identity(x.system, lp, halves)
    print(a.word_str(mu), "->", ok)
