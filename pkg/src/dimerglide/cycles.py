"""Cyclic edge sets, cycles, halves and vertex-halves.

A set of edges is *cyclic* when every vertex meets either none or exactly
two of its edges.  A *cycle* is a non-empty cyclic set with no smaller
non-empty cyclic subset; equivalently, a cyclic set that is connected under
the relation "the two edges share a vertex".
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .hypergraph import EdgeSet, Hypergraph, HypergraphError, bits, delete_support, popcount


class BudgetExceeded(RuntimeError):
    """An enumeration hit its configured size limit."""


DEFAULT_MAX_CYCLES = 100_000


@dataclass(frozen=True, order=True)
class Cycle:
    """A cycle given by its edge mask and the mask of its vertex support."""

    edges: EdgeSet
    vertices: int

    @property
    def size(self) -> int:
        return popcount(self.edges)


@dataclass(frozen=True)
class EvenCycle:
    """An even cycle with its edge halves and (graph mode) vertex halves.

    ``halves[0]`` is the half containing the smallest-index edge.
    ``vhalves[0]`` is the vertex half containing the smallest-index vertex;
    ``vhalves`` is ``None`` when some edge of the cycle is not a 2-edge.
    """

    cycle: Cycle
    halves: tuple[EdgeSet, EdgeSet]
    vhalves: Optional[tuple[int, int]]

    @property
    def edges(self) -> EdgeSet:
        return self.cycle.edges

    @property
    def vertices(self) -> int:
        return self.cycle.vertices


def make_cycle(h: Hypergraph, s: EdgeSet) -> Cycle:
    return Cycle(s, h.support(s))


def is_cyclic(h: Hypergraph, s: EdgeSet) -> bool:
    """True iff every vertex meets 0 or 2 edges of ``s``."""
    for ve in h.vertex_edges:
        if popcount(ve & s) not in (0, 2):
            return False
    return True


def _touching_components(h: Hypergraph, s: EdgeSet) -> list[EdgeSet]:
    remaining = s
    parts = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            touched = 0
            for i in bits(frontier):
                for v in bits(h.edge_vertices[i]):
                    touched |= h.vertex_edges[v]
            frontier = touched & remaining & ~comp
            comp |= frontier
        parts.append(comp)
        remaining &= ~comp
    return parts


def decompose(h: Hypergraph, s: EdgeSet) -> list[Cycle]:
    """Split a cyclic set into its pairwise independent cycles.

    The cycles are the classes of the equivalence relation generated by
    "shares a vertex", returned in increasing order of their smallest edge.
    """
    if not is_cyclic(h, s):
        raise ValueError("edge set is not cyclic")
    return [make_cycle(h, c) for c in _touching_components(h, s)]


def is_cycle(h: Hypergraph, s: EdgeSet) -> bool:
    return s != 0 and is_cyclic(h, s) and len(_touching_components(h, s)) == 1


def enumerate_cycles(h: Hypergraph, limit: int | None = DEFAULT_MAX_CYCLES) -> list[Cycle]:
    """All cycles of ``h``, ordered by (size, edge mask).

    The search grows an edge set from its smallest edge.  At every step the
    smallest vertex of degree one is the one that must be closed off, so the
    next edge is forced to contain it; this makes every cycle appear exactly
    once.  Vertex degrees above two are pruned immediately.

    Raises :class:`BudgetExceeded` when more than ``limit`` cycles exist.
    """
    found: list[EdgeSet] = []
    ve = h.vertex_edges
    ev = h.edge_vertices

    def grow(s: EdgeSet, allowed: EdgeSet, deg: dict[int, int]) -> None:
        open_v = [v for v, d in deg.items() if d == 1]
        if not open_v:
            found.append(s)
            if limit is not None and len(found) > limit:
                raise BudgetExceeded(f"more than {limit} cycles")
            return
        v = min(open_v)
        for j in bits(ve[v] & allowed & ~s):
            if any(deg.get(w, 0) >= 2 for w in bits(ev[j])):
                continue
            nd = dict(deg)
            for w in bits(ev[j]):
                nd[w] = nd.get(w, 0) + 1
            grow(s | 1 << j, allowed, nd)

    for r in range(h.n_edges):
        allowed = h.all_edges & ~((1 << r) - 1)
        deg = {w: 1 for w in bits(ev[r])}
        grow(1 << r, allowed, deg)

    found.sort(key=lambda m: (popcount(m), _lex_key(m)))
    return [make_cycle(h, s) for s in found]


def _lex_key(mask: EdgeSet) -> tuple[int, ...]:
    return tuple(bits(mask))


def even_data(h: Hypergraph, cycle: Cycle) -> Optional[EvenCycle]:
    """Halves of an even cycle, or ``None`` when the cycle is odd.

    The edges of the cycle form an auxiliary multigraph with one adjacency
    per shared vertex; the cycle is even exactly when that multigraph is
    bipartite, and the halves are its colour classes.
    """
    s = cycle.edges
    colour: dict[int, int] = {}
    start = next(bits(s))
    colour[start] = 0
    queue = deque([start])
    while queue:
        i = queue.popleft()
        for v in bits(h.edge_vertices[i]):
            for j in bits(h.vertex_edges[v] & s):
                if j == i:
                    continue
                if j not in colour:
                    colour[j] = 1 - colour[i]
                    queue.append(j)
                elif colour[j] == colour[i]:
                    return None
    h0 = sum(1 << i for i, c in colour.items() if c == 0)
    h1 = s & ~h0
    if h0 | h1 != s or not h1:
        return None

    vhalves = None
    if all(popcount(h.edge_vertices[i]) == 2 for i in bits(s)):
        vhalves = _vertex_halves(h, s, cycle.vertices)
    return EvenCycle(cycle, (h0, h1), vhalves)


def _vertex_halves(h: Hypergraph, s: EdgeSet, support: int) -> tuple[int, int]:
    # two-colour the vertices around the circle
    first = (support & -support).bit_length() - 1
    colour = {first: 0}
    queue = deque([first])
    while queue:
        v = queue.popleft()
        for i in bits(h.vertex_edges[v] & s):
            for w in bits(h.edge_vertices[i]):
                if w != v and w not in colour:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
    v0 = sum(1 << v for v, c in colour.items() if c == 0)
    return v0, support & ~v0


def independent(s: Cycle, t: Cycle) -> bool:
    """True iff the two cycles share no vertex."""
    return not s.vertices & t.vertices


def is_odd(h: Hypergraph, cycle: Cycle) -> bool:
    return even_data(h, cycle) is None


def delete_odd_support(h: Hypergraph, cycles: Iterable[Cycle]) -> Hypergraph:
    """Remove the vertices of the given cycles and every incident edge.

    The cycles must be pairwise independent.  Remaining vertices are kept
    even when they become isolated.
    """
    cycles = list(cycles)
    vm = 0
    for i, s in enumerate(cycles):
        for t in cycles[i + 1:]:
            if not independent(s, t):
                raise HypergraphError("cycles are not pairwise independent")
        vm |= s.vertices
    return delete_support(h, vm)
