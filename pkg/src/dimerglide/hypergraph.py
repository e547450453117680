"""Finite hypergraphs and multigraphs.

Edge sets are plain Python integers used as bit vectors: bit ``i`` is set
when the edge with index ``i`` belongs to the set.  Edge indices follow the
order in which edges were given, so every edge set is tied to one
:class:`Hypergraph`.  The product of two edge sets is their symmetric
difference ``a ^ b``; the empty set ``0`` is the unit.
"""
from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping, Sequence

GRAPH = "graph"
HYPERGRAPH = "hypergraph"

EdgeSet = int


class HypergraphError(ValueError):
    """Raised for malformed or invalid hypergraph input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Hypergraph:
    """A finite hypergraph ``(E, V, boundary)``.

    Parameters
    ----------
    vertices : sequence of str
        Vertex identifiers, unique.
    edges : sequence of (str, sequence of str)
        Edge identifiers with their boundary vertices.  The boundary order
        is remembered (subdivision uses it to orient paths) but carries no
        other meaning.
    mode : {"graph", "hypergraph"}
        In graph mode every boundary has exactly two distinct vertices.

    Instances are treated as immutable.
    """

    __slots__ = (
        "mode",
        "vertices",
        "edge_ids",
        "boundaries",
        "vertex_index",
        "edge_index",
        "vertex_edges",
        "edge_vertices",
    )

    def __init__(self, vertices: Sequence[str], edges: Sequence[tuple[str, Sequence[str]]],
                 mode: str = GRAPH):
        if mode not in (GRAPH, HYPERGRAPH):
            raise HypergraphError(f"unknown mode {mode!r}")
        vertices = tuple(str(v) for v in vertices)
        if len(set(vertices)) != len(vertices):
            raise HypergraphError("duplicate vertex identifier")
        edge_ids = tuple(str(e) for e, _ in edges)
        if len(set(edge_ids)) != len(edge_ids):
            raise HypergraphError("duplicate edge identifier")
        vertex_index = {v: i for i, v in enumerate(vertices)}

        boundaries = []
        for eid, boundary in edges:
            boundary = tuple(str(v) for v in boundary)
            if not boundary:
                raise HypergraphError(f"edge {eid!r}: empty boundary")
            if len(set(boundary)) != len(boundary):
                raise HypergraphError(f"edge {eid!r}: repeated boundary vertex")
            for v in boundary:
                if v not in vertex_index:
                    raise HypergraphError(f"edge {eid!r}: unknown vertex {v!r}")
            if mode == GRAPH and len(boundary) != 2:
                raise HypergraphError(
                    f"edge {eid!r}: graph edges need exactly two distinct endpoints")
            boundaries.append(boundary)

        vertex_edges = [0] * len(vertices)
        edge_vertices = []
        for i, boundary in enumerate(boundaries):
            vm = 0
            for v in boundary:
                vertex_edges[vertex_index[v]] |= 1 << i
                vm |= 1 << vertex_index[v]
            edge_vertices.append(vm)

        self.mode = mode
        self.vertices = vertices
        self.edge_ids = edge_ids
        self.boundaries = tuple(boundaries)
        self.vertex_index = vertex_index
        self.edge_index = {e: i for i, e in enumerate(edge_ids)}
        self.vertex_edges = tuple(vertex_edges)
        self.edge_vertices = tuple(edge_vertices)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edge_ids)

    @property
    def all_edges(self) -> EdgeSet:
        return (1 << self.n_edges) - 1

    @property
    def all_vertices(self) -> int:
        return (1 << self.n_vertices) - 1

    @property
    def is_graph(self) -> bool:
        return all(len(b) == 2 for b in self.boundaries)

    def require_graph(self) -> None:
        if self.mode != GRAPH:
            raise HypergraphError("operation requires a graph-mode hypergraph")

    # -- edge-set helpers ---------------------------------------------------

    def edge_set(self, ids: Iterable[str]) -> EdgeSet:
        mask = 0
        for e in ids:
            try:
                mask |= 1 << self.edge_index[str(e)]
            except KeyError:
                raise HypergraphError(f"unknown edge {e!r}") from None
        return mask

    def edge_names(self, mask: EdgeSet) -> list[str]:
        return [self.edge_ids[i] for i in bits(mask)]

    def vertex_set(self, ids: Iterable[str]) -> int:
        mask = 0
        for v in ids:
            try:
                mask |= 1 << self.vertex_index[str(v)]
            except KeyError:
                raise HypergraphError(f"unknown vertex {v!r}") from None
        return mask

    def vertex_names(self, vmask: int) -> list[str]:
        return [self.vertices[i] for i in bits(vmask)]

    def support(self, mask: EdgeSet) -> int:
        """Vertex mask of all vertices incident to edges of ``mask``."""
        vm = 0
        for i in bits(mask):
            vm |= self.edge_vertices[i]
        return vm

    # -- comparison / serialization ----------------------------------------

    def _key(self):
        return (self.mode, self.vertices, self.edge_ids, self.boundaries)

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"Hypergraph(mode={self.mode!r}, |V|={self.n_vertices}, "
                f"|E|={self.n_edges})")

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "vertices": list(self.vertices),
            "edges": [{"id": e, "boundary": list(b)}
                      for e, b in zip(self.edge_ids, self.boundaries)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def parse_hypergraph(text: str | Mapping, mode: str | None = None) -> Hypergraph:
    """Build a validated :class:`Hypergraph` from its JSON description.

    ``text`` may be a JSON string or an already decoded mapping of the form
    ``{"mode": ..., "vertices": [...], "edges": [{"id": ..., "boundary": [...]}]}``.
    An explicit ``mode`` argument overrides the one in the document.
    """
    if isinstance(text, (str, bytes)):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise HypergraphError(f"malformed JSON: {exc}") from None
    else:
        doc = text
    if not isinstance(doc, Mapping):
        raise HypergraphError("top-level JSON value must be an object")
    mode = mode or doc.get("mode", GRAPH)
    vertices = doc.get("vertices")
    edges = doc.get("edges")
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise HypergraphError("'vertices' and 'edges' must be lists")
    parsed = []
    for item in edges:
        if not isinstance(item, Mapping) or "id" not in item or "boundary" not in item:
            raise HypergraphError(f"malformed edge entry {item!r}")
        if not isinstance(item["boundary"], list):
            raise HypergraphError(f"edge {item['id']!r}: boundary must be a list")
        parsed.append((item["id"], item["boundary"]))
    return Hypergraph(vertices, parsed, mode=mode)


def load_hypergraph(path, mode: str | None = None) -> Hypergraph:
    with open(path) as fh:
        return parse_hypergraph(fh.read(), mode=mode)


def disjoint_union(h1: Hypergraph, h2: Hypergraph, tags: tuple[str, str] = ("1", "2")) -> Hypergraph:
    """Disjoint union; identifiers of ``h1``/``h2`` are prefixed ``"1/"``, ``"2/"``.

    The result is in graph mode only when both operands are.
    """
    mode = GRAPH if h1.mode == GRAPH and h2.mode == GRAPH else HYPERGRAPH
    vertices = []
    edges = []
    for tag, h in zip(tags, (h1, h2)):
        vertices += [f"{tag}/{v}" for v in h.vertices]
        edges += [(f"{tag}/{e}", [f"{tag}/{v}" for v in b])
                  for e, b in zip(h.edge_ids, h.boundaries)]
    return Hypergraph(vertices, edges, mode=mode)


def subdivide(h: Hypergraph, profile: Mapping[str, int]) -> tuple[Hypergraph, dict[str, tuple[str, ...]]]:
    """Insert ``2 * profile[e]`` new vertices inside each edge ``e``.

    Edge ``e`` with ``k = profile[e] > 0`` becomes the path ``e.0, ..., e.{2k}``
    running from its first boundary vertex to its second, through new
    vertices ``e.v1, ..., e.v{2k}``.  Edges with ``k = 0`` keep their id.
    Sub-edges replace the original edge in place in the edge order; new
    vertices are appended after the old ones.

    Returns the subdivided graph and the map from each original edge id to
    its ordered tuple of sub-edge ids.
    """
    h.require_graph()
    for e, k in profile.items():
        if e not in h.edge_index:
            raise HypergraphError(f"unknown edge {e!r} in subdivision profile")
        if int(k) != k or k < 0:
            raise HypergraphError(f"edge {e!r}: subdivision count must be a non-negative integer")
    vertices = list(h.vertices)
    edges = []
    paths = {}
    for e, (u, v) in zip(h.edge_ids, h.boundaries):
        k = int(profile.get(e, 0))
        if k == 0:
            edges.append((e, (u, v)))
            paths[e] = (e,)
            continue
        inner = [f"{e}.v{j}" for j in range(1, 2 * k + 1)]
        vertices += inner
        chain = [u, *inner, v]
        sub = tuple(f"{e}.{j}" for j in range(2 * k + 1))
        edges += [(sub[j], (chain[j], chain[j + 1])) for j in range(2 * k + 1)]
        paths[e] = sub
    return Hypergraph(vertices, edges, mode=GRAPH), paths


def delete_support(h: Hypergraph, vmask: int) -> Hypergraph:
    """Remove the vertices of ``vmask`` and every edge incident to them."""
    vertices = [v for i, v in enumerate(h.vertices) if not vmask >> i & 1]
    edges = [(e, b) for e, b, ev in zip(h.edge_ids, h.boundaries, h.edge_vertices)
             if not ev & vmask]
    return Hypergraph(vertices, edges, mode=h.mode)
