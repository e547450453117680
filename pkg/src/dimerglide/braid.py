"""Marked dimer coverings and the permutation shadow of dimer loops.

Permutations are tuples in one-line notation on ``1..N``: entry ``i`` is
the mark sitting, at the end of the loop, on the edge that carried mark
``i`` at the start.  For loops ``alpha`` and ``beta`` at the same base,
``perm(alpha + beta) == compose(perm(alpha), perm(beta))`` where
``compose(p, q)[i] = p[q[i]]``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .cycles import EvenCycle, even_data, make_cycle
from .dimer import GlideLoop, is_dimer_covering
from .glide import GlidingSystem
from .hypergraph import EdgeSet, Hypergraph, bits, popcount, subdivide

Permutation = tuple[int, ...]


class TransportError(ValueError):
    pass


@dataclass(frozen=True)
class VOrientation:
    """A distinguished vertex half (vertex mask) for each even-cycle glide."""

    vhalves: Mapping[int, int]

    @classmethod
    def canonical(cls, sys: GlidingSystem) -> "VOrientation":
        return cls({i: d.vhalves[0] for i, d in enumerate(sys.even) if d.vhalves})

    @classmethod
    def from_vertex_class(cls, sys: GlidingSystem, vmask: int) -> "VOrientation":
        """Pick in each cycle the vertex half lying inside ``vmask`` (bipartite graphs)."""
        out = {}
        for i, d in enumerate(sys.even):
            if not d.vhalves:
                continue
            inside = [v for v in d.vhalves if v & ~vmask == 0]
            if len(inside) != 1:
                raise ValueError(f"vertex class does not contain exactly one v-half of glide {i}")
            out[i] = inside[0]
        return cls(out)

    def flipped(self, sys: GlidingSystem, glide_id: int) -> "VOrientation":
        vh = dict(self.vhalves)
        vh[glide_id] = sys.even[glide_id].vertices & ~vh[glide_id]
        return VOrientation(vh)


@dataclass(frozen=True)
class MarkedCovering:
    """A dimer covering with marks ``1..N`` on its edges (edge index -> mark)."""

    covering: EdgeSet
    marks: Mapping[int, int]

    @classmethod
    def standard(cls, covering: EdgeSet, order: Optional[Sequence[int]] = None) -> "MarkedCovering":
        """Marks ``1..N`` following ``order`` (default: increasing edge index)."""
        order = list(bits(covering)) if order is None else list(order)
        if sorted(order) != list(bits(covering)):
            raise ValueError("marking order must list the covering edges exactly once")
        return cls(covering, {e: k + 1 for k, e in enumerate(order)})


def glide_marked(h: Hypergraph, m: MarkedCovering, s: EdgeSet, vhalf: int) -> MarkedCovering:
    """Glide along ``s`` pushing each marked edge of ``s`` through its vertex in ``vhalf``.

    The mark moves to the other edge of ``s`` at that vertex; marks off
    ``s`` stay put.
    """
    new_cov = m.covering ^ s
    if not is_dimer_covering(h, new_cov):
        raise TransportError("gliding does not give a dimer covering")
    marks = {e: k for e, k in m.marks.items() if not s >> e & 1}
    for e in bits(m.covering & s):
        pivot = h.edge_vertices[e] & vhalf
        if popcount(pivot) != 1:
            raise TransportError(f"edge {h.edge_ids[e]!r} does not have exactly one vertex in the v-half")
        v = pivot.bit_length() - 1
        other = h.vertex_edges[v] & s & ~(1 << e)
        if popcount(other) != 1:
            raise TransportError("v-half vertex does not meet exactly two cycle edges")
        f = other.bit_length() - 1
        if f in marks:
            raise TransportError("two marks collide on one edge")
        marks[f] = m.marks[e]
    if set(marks) != set(bits(new_cov)):
        raise TransportError("marks do not cover the new covering")
    return MarkedCovering(new_cov, marks)


def transport_loop(h: Hypergraph, base: EdgeSet, cycles: Sequence[EdgeSet],
                   vhalves: Sequence[int], order: Optional[Sequence[int]] = None) -> Permutation:
    """Run marked gliding along ``cycles`` and read off the one-line permutation."""
    start = MarkedCovering.standard(base, order)
    m = start
    for s, vh in zip(cycles, vhalves):
        m = glide_marked(h, m, s, vh)
    if m.covering != base:
        raise TransportError("loop does not return to its base")
    by_mark = sorted(start.marks, key=start.marks.get)
    return tuple(m.marks[e] for e in by_mark)


def braid_permutation(sys: GlidingSystem, loop: GlideLoop, vo: VOrientation,
                      order: Optional[Sequence[int]] = None) -> Permutation:
    h = sys.hypergraph
    h.require_graph()
    try:
        vh = [vo.vhalves[i] for i in loop.steps]
    except KeyError as exc:
        raise ValueError(f"no distinguished v-half for glide {exc.args[0]}") from None
    return transport_loop(h, loop.base, [sys.glides[i] for i in loop.steps], vh, order)


def subdivided_covering(h: Hypergraph, hn: Hypergraph, paths: Mapping[str, tuple[str, ...]],
                        a: EdgeSet) -> EdgeSet:
    """Image of a covering under the canonical bijection onto the subdivided graph.

    A covering edge keeps the odd-position sub-edges of its path (first and
    last included); a non-covering edge contributes the even-position ones.
    """
    out = 0
    for i, e in enumerate(h.edge_ids):
        sub = paths[e]
        start = 0 if a >> i & 1 else 1
        for k in range(start, len(sub), 2):
            out |= 1 << hn.edge_index[sub[k]]
    return out


def subdivided_edge_set(h: Hypergraph, hn: Hypergraph, paths, s: EdgeSet) -> EdgeSet:
    return hn.edge_set(sub for i in bits(s) for sub in paths[h.edge_ids[i]])


def induced_vhalf(h: Hypergraph, hn: Hypergraph, s_n: EdgeSet, vhalf: int) -> int:
    """The vertex half of a subdivided cycle containing the original v-half."""
    support = hn.support(s_n)
    orig = hn.vertex_set(h.vertex_names(vhalf))
    first = (orig & -orig).bit_length() - 1
    colour = {first: 0}
    queue = deque([first])
    while queue:
        v = queue.popleft()
        for i in bits(hn.vertex_edges[v] & s_n):
            for w in bits(hn.edge_vertices[i]):
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
    half = sum(1 << v for v, c in colour.items() if c == 0)
    if orig & ~half or half & ~support:
        raise TransportError("original v-half does not sit in one half of the subdivided cycle")
    return half


def theta_n_permutation(sys: GlidingSystem, loop: GlideLoop, profile: Mapping[str, int],
                        vo: VOrientation) -> Permutation:
    """Permutation of ``N + |n|`` marks after subdividing edges by ``profile``.

    The loop is carried to the subdivided graph through the canonical
    covering bijection; each cycle keeps the v-half that contains its
    original distinguished v-half.  Marks follow increasing edge index of
    the subdivided covering.
    """
    h = sys.hypergraph
    h.require_graph()
    hn, paths = subdivide(h, profile)
    base_n = subdivided_covering(h, hn, paths, loop.base)
    cycles_n, vh_n = [], []
    for i in loop.steps:
        try:
            vh = vo.vhalves[i]
        except KeyError:
            raise ValueError(f"no distinguished v-half for glide {i}") from None
        s_n = subdivided_edge_set(h, hn, paths, sys.glides[i])
        cycles_n.append(s_n)
        vh_n.append(induced_vhalf(h, hn, s_n, vh))
    return transport_loop(hn, base_n, cycles_n, vh_n)


# -- permutation helpers -----------------------------------------------------

def compose(p: Permutation, q: Permutation) -> Permutation:
    """``(p o q)(i) = p(q(i))`` on one-line tuples over ``1..N``."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def invert(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x - 1] = i + 1
    return tuple(out)


def one_line(p: Permutation) -> str:
    """Compact one-line form, e.g. ``(231)``; entries are comma-separated past 9."""
    sep = "" if len(p) < 10 else ","
    return "(" + sep.join(str(x) for x in p) + ")"


def cycle_notation(p: Permutation) -> str:
    seen = set()
    parts = []
    for i in range(1, len(p) + 1):
        if i in seen or p[i - 1] == i:
            seen.add(i)
            continue
        cyc = []
        j = i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = p[j - 1]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def even_cycle_of(h: Hypergraph, s: EdgeSet) -> EvenCycle:
    d = even_data(h, make_cycle(h, s))
    if d is None:
        raise ValueError("not an even cycle")
    return d
