"""JSON formats for loops, half choices, state sets and the bundled corpus."""
from __future__ import annotations

import json
from importlib import resources
from typing import Any, Mapping

from .braid import VOrientation
from .dimer import GlideLoop
from .glide import GlidingSystem
from .hypergraph import EdgeSet, Hypergraph, HypergraphError, parse_hypergraph
from .raag import Orientation

CORPUS = (
    "C3", "C4", "C5", "C6",
    "theta2", "theta3", "theta4", "theta5", "theta6",
    "C4_C4", "C3_C4", "C5_C4", "theta3_C4", "ladder", "exact_cover3",
)


def corpus_text(name: str) -> str:
    return resources.files("dimerglide.data").joinpath(f"{name}.json").read_text()


def load_corpus(name: str) -> Hypergraph:
    """A bundled graph or hypergraph by name (see :data:`CORPUS`)."""
    return parse_hypergraph(corpus_text(name))


def load_corpus_json(name: str) -> Any:
    return json.loads(corpus_text(name))


def _read(doc):
    if isinstance(doc, (str, bytes)):
        return json.loads(doc)
    return doc


def glide_ref(sys: GlidingSystem, h: Hypergraph, ref) -> int:
    """Resolve a glide given as an id or as a list of edge ids."""
    if isinstance(ref, int):
        if not 0 <= ref < len(sys):
            raise HypergraphError(f"unknown glide id {ref}")
        return ref
    mask = h.edge_set(ref)
    try:
        return sys.glide_index[mask]
    except KeyError:
        raise HypergraphError(f"{sorted(ref)} is not an even cycle") from None


def covering_ref(h: Hypergraph, ref) -> EdgeSet:
    if isinstance(ref, str):
        ref = [x for x in ref.split(",") if x]
    return h.edge_set(ref)


def parse_loop(sys: GlidingSystem, doc) -> GlideLoop:
    """``{"base": [edge ids], "steps": [glide id | [edge ids], ...]}``."""
    doc = _read(doc)
    h = sys.hypergraph
    return GlideLoop(covering_ref(h, doc["base"]),
                     tuple(glide_ref(sys, h, s) for s in doc["steps"]))


def loop_to_dict(sys: GlidingSystem, loop: GlideLoop) -> dict:
    h = sys.hypergraph
    return {"base": h.edge_names(loop.base),
            "steps": [h.edge_names(sys.glides[i]) for i in loop.steps]}


def parse_vhalves(sys: GlidingSystem, doc) -> VOrientation:
    """``{"vhalves": [{"cycle": ..., "vhalf": [vertex ids]}]}``; unlisted cycles use v-half 0."""
    doc = _read(doc)
    h = sys.hypergraph
    vh = dict(VOrientation.canonical(sys).vhalves)
    for item in doc.get("vhalves", []):
        i = glide_ref(sys, h, item["cycle"])
        mask = h.vertex_set(item["vhalf"])
        if mask not in (sys.even[i].vhalves or ()):
            raise HypergraphError(f"{item['vhalf']} is not a v-half of cycle {i}")
        vh[i] = mask
    return VOrientation(vh)


def parse_halves(sys: GlidingSystem, doc) -> Orientation:
    """``{"halves": [{"cycle": ..., "half": [edge ids]}]}``; unlisted cycles use half 0."""
    doc = _read(doc)
    h = sys.hypergraph
    halves = dict(Orientation.canonical(sys).halves)
    for item in doc.get("halves", []):
        i = glide_ref(sys, h, item["cycle"])
        mask = h.edge_set(item["half"])
        if mask not in sys.even[i].halves:
            raise HypergraphError(f"{item['half']} is not a half of cycle {i}")
        halves[i] = mask
    return Orientation(halves)


def parse_profile(h: Hypergraph, source) -> dict[str, int]:
    """Subdivision profile from ``"e1:1,e2:2"`` or a ``{"edge": count}`` mapping."""
    if isinstance(source, Mapping):
        items = source.items()
    else:
        source = source.strip()
        if source.startswith("{"):
            items = json.loads(source).items()
        else:
            items = [part.split(":") for part in source.split(",") if part]
    out = {}
    for e, k in items:
        if str(e) not in h.edge_index:
            raise HypergraphError(f"unknown edge {e!r} in subdivision profile")
        try:
            k = int(k)
        except ValueError:
            raise HypergraphError(f"bad subdivision count {k!r}") from None
        if k < 0:
            raise HypergraphError("subdivision counts must be non-negative")
        out[str(e)] = k
    return out


def parse_states(doc) -> tuple[GlidingSystem, frozenset, list[str]]:
    """An abstract power-group state file.

    ``{"edges": [...], "glides": [[edge ids], ...], "independent": [[i, j], ...],
    "states": [[edge ids], ...]}``.  Without ``"independent"``, disjoint
    glides are independent.
    """
    doc = _read(doc)
    edges = [str(e) for e in doc["edges"]]
    if len(set(edges)) != len(edges):
        raise HypergraphError("duplicate edge identifier")
    index = {e: i for i, e in enumerate(edges)}

    def mask(ids):
        m = 0
        for e in ids:
            try:
                m |= 1 << index[str(e)]
            except KeyError:
                raise HypergraphError(f"unknown edge {e!r}") from None
        return m

    glides = [mask(g) for g in doc["glides"]]
    indep = None
    if "independent" in doc:
        pairs = {frozenset(map(int, p)) for p in doc["independent"]}
        indep = lambda i, j: frozenset((i, j)) in pairs and i != j  # noqa: E731
    try:
        sys = GlidingSystem(glides, independent=indep)
    except ValueError as exc:
        raise HypergraphError(str(exc)) from None
    return sys, frozenset(mask(s) for s in doc["states"]), edges
