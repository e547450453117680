"""Dimer coverings, the dimer complex and the space of dimer labelings."""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .cycles import Cycle, decompose, delete_odd_support, enumerate_cycles, even_data, independent
from .glide import (DEFAULT_MAX_CUBES, Cube, CubeComplex, GlidingSystem, build_complex,
                    canonical_cube)
from .hypergraph import EdgeSet, Hypergraph, bits, popcount


def enumerate_dimer_coverings(h: Hypergraph) -> list[EdgeSet]:
    """All dimer coverings (perfect matchings) of ``h``, sorted.

    Exact-cover backtracking: the least uncovered vertex picks which edge
    covers it next.
    """
    out: list[EdgeSet] = []
    full = h.all_vertices
    ve, ev = h.vertex_edges, h.edge_vertices

    def search(covered: int, chosen: EdgeSet) -> None:
        if covered == full:
            out.append(chosen)
            return
        free = ~covered & full
        v = (free & -free).bit_length() - 1
        for e in bits(ve[v]):
            if not ev[e] & covered:
                search(covered | ev[e], chosen | 1 << e)

    if h.n_vertices == 0:
        return [0]
    search(0, 0)
    return sorted(out)


def is_dimer_covering(h: Hypergraph, a: EdgeSet) -> bool:
    return all(popcount(ve & a) == 1 for ve in h.vertex_edges)


def dimer_system(h: Hypergraph, max_cycles: int | None = None) -> GlidingSystem:
    return GlidingSystem.from_hypergraph(h, max_cycles=max_cycles)


def dimer_complex(h: Hypergraph, max_cubes: int = DEFAULT_MAX_CUBES,
                  max_cycles: int | None = None, jobs: int = 1,
                  system: GlidingSystem | None = None) -> CubeComplex:
    """The dimer complex: the glide complex of the dimer coverings of ``h``."""
    sys = system if system is not None else dimer_system(h, max_cycles=max_cycles)
    return build_complex(sys, enumerate_dimer_coverings(h), max_cubes=max_cubes, jobs=jobs)


def cycle_glide_ids(sys: GlidingSystem, cycles: Sequence[Cycle]) -> tuple[int, ...]:
    return tuple(sorted(sys.glide_index[c.edges] for c in cycles))


def dimer_hull(x: CubeComplex, a: EdgeSet, b: EdgeSet) -> Cube:
    """The hull of two dimer coverings: the cube at ``a`` on the cycles of ``ab``."""
    h = x.hypergraph
    cycles = decompose(h, a ^ b)
    for c in cycles:
        d = even_data(h, c)
        if d is None or c.edges & a not in d.halves:
            raise AssertionError("cycle of AB is not glided by A")
    return canonical_cube(x.system, a, cycle_glide_ids(x.system, cycles))


def vertex_edge(h: Hypergraph, a: EdgeSet, v: int) -> int:
    """Index of the unique edge of covering ``a`` at vertex index ``v``."""
    m = h.vertex_edges[v] & a
    return (m & -m).bit_length() - 1


def is_flat(h: Hypergraph, a: EdgeSet, b: EdgeSet, c: EdgeSet) -> bool:
    """At every vertex at least two of the three covering edges coincide."""
    for ve in h.vertex_edges:
        ea, eb, ec = ve & a, ve & b, ve & c
        if ea != eb and eb != ec and ea != ec:
            return False
    return True


def flat_triples(h: Hypergraph, coverings: Sequence[EdgeSet]) -> list[tuple[EdgeSet, EdgeSet, EdgeSet]]:
    """All ordered flat triples, repeats included."""
    return [(a, b, c) for a in coverings for b in coverings for c in coverings
            if is_flat(h, a, b, c)]


# -- labelings ---------------------------------------------------------------

@dataclass(frozen=True)
class ComplexPoint:
    """A point ``(A, S, x)`` of a cube: base state, glide ids, coordinates in [0, 1]."""

    base: EdgeSet
    glides: tuple[int, ...]
    coords: tuple[Fraction, ...]


def evaluate(sys: GlidingSystem, p: ComplexPoint) -> dict[int, Fraction]:
    """The edge labeling of a complex point, keyed by edge index.

    An edge of glide ``s`` gets ``x(s)`` when it is outside the base and
    ``1 - x(s)`` when inside; all other edges keep their 0/1 base value.
    """
    h = sys.hypergraph
    n = h.n_edges if h is not None else max(
        [p.base.bit_length()] + [sys.glides[i].bit_length() for i in p.glides])
    labels = {e: Fraction(p.base >> e & 1) for e in range(n)}
    for i, x in zip(p.glides, p.coords):
        x = Fraction(x)
        for e in bits(sys.glides[i]):
            labels[e] = 1 - x if p.base >> e & 1 else x
    return labels


def is_dimer_labeling(h: Hypergraph, labels: Mapping[int, Fraction]) -> bool:
    for ve in h.vertex_edges:
        vals = [labels[e] for e in bits(ve)]
        if any(v < 0 or v > 1 for v in vals):
            return False
        if sum(vals) != 1 or sum(1 for v in vals if v != 0) > 2:
            return False
    return True


def labeling_by_name(h: Hypergraph, labels: Mapping[int, Fraction]) -> dict[str, str]:
    return {h.edge_ids[e]: str(v) for e, v in sorted(labels.items())}


@dataclass
class LabelingComponent:
    """One component of the labeling space: the odd cycles fixed at 1/2 and the rest."""

    odd_cycles: tuple[Cycle, ...]
    subgraph: Hypergraph
    complex: CubeComplex


def odd_cycle_sets(h: Hypergraph, max_cycles: int | None = None) -> list[tuple[Cycle, ...]]:
    """Every set of pairwise independent odd cycles, the empty set first."""
    kw = {} if max_cycles is None else {"limit": max_cycles}
    odd = [c for c in enumerate_cycles(h, **kw) if even_data(h, c) is None]
    out: list[tuple[Cycle, ...]] = []

    def extend(chosen: tuple[Cycle, ...], start: int) -> None:
        out.append(chosen)
        for k in range(start, len(odd)):
            if all(independent(odd[k], c) for c in chosen):
                extend(chosen + (odd[k],), k + 1)

    extend((), 0)
    return sorted(out, key=lambda s: (len(s), [c.edges for c in s]))


def labeling_components(h: Hypergraph, max_cubes: int = DEFAULT_MAX_CUBES,
                        max_cycles: int | None = None) -> list[LabelingComponent]:
    """Components of the dimer labeling space of a graph.

    Each component fixes a set ``S`` of independent odd cycles at 1/2 and is
    the dimer complex of the graph with the vertices of ``S`` removed.  Sets
    whose remaining graph has no dimer covering give no component.
    """
    h.require_graph()
    out = []
    for cyc in odd_cycle_sets(h, max_cycles=max_cycles):
        sub = delete_odd_support(h, cyc)
        if not enumerate_dimer_coverings(sub):
            continue
        out.append(LabelingComponent(cyc, sub, dimer_complex(sub, max_cubes=max_cubes,
                                                               max_cycles=max_cycles)))
    return out


# -- loops -------------------------------------------------------------------

@dataclass(frozen=True)
class GlideLoop:
    """A closed sequence of glidings starting at ``base``; steps are glide ids."""

    base: EdgeSet
    steps: tuple[int, ...]

    def states(self, sys: GlidingSystem) -> list[EdgeSet]:
        out = [self.base]
        for i in self.steps:
            out.append(out[-1] ^ sys.glides[i])
        return out

    def validate(self, sys: GlidingSystem, states) -> None:
        path = self.states(sys)
        for a in path:
            if a not in states:
                raise ValueError("loop leaves the state set")
        if path[-1] != self.base:
            raise ValueError("loop does not return to its base")

    def __add__(self, other: "GlideLoop") -> "GlideLoop":
        if other.base != self.base:
            raise ValueError("loops have different bases")
        return GlideLoop(self.base, self.steps + other.steps)

    def inverse(self) -> "GlideLoop":
        return GlideLoop(self.base, self.steps[::-1])


def _edge_graph(x: CubeComplex) -> dict[EdgeSet, list[tuple[EdgeSet, int]]]:
    adj: dict[EdgeSet, list[tuple[EdgeSet, int]]] = {a: [] for a in x.states}
    for a, b, g in x.edges():
        adj[a].append((b, g))
        adj[b].append((a, g))
    return adj


def shortest_path(x: CubeComplex, a: EdgeSet, b: EdgeSet) -> list[int]:
    """Glide ids of a shortest edge path from ``a`` to ``b`` in the 1-skeleton."""
    adj = _edge_graph(x)
    prev = {a: None}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for v, g in adj[u]:
            if v not in prev:
                prev[v] = (u, g)
                queue.append(v)
    if b not in prev:
        raise ValueError("states lie in different components")
    steps = []
    while prev[b] is not None:
        b, g = prev[b]
        steps.append(g)
    return steps[::-1]


def random_loop(x: CubeComplex, base: EdgeSet, rng: random.Random,
                max_walk: int = 8) -> GlideLoop:
    """A random walk of up to ``max_walk`` steps closed by a shortest path home."""
    adj = _edge_graph(x)
    steps = []
    cur = base
    for _ in range(rng.randint(0, max_walk)):
        if not adj[cur]:
            break
        cur, g = rng.choice(adj[cur])
        steps.append(g)
    steps += shortest_path(x, cur, base)
    return GlideLoop(base, tuple(steps))


def dimer_states(h: Hypergraph) -> frozenset:
    return frozenset(enumerate_dimer_coverings(h))


def default_base(x: CubeComplex) -> Optional[EdgeSet]:
    return x.states[0] if x.states else None

