"""Gliding systems over a power group and their cube complexes.

Elements of the power group ``2^E`` are edge-set integers; a glide acts on
a state by symmetric difference.  Only set-like systems are modelled:
independent glides are disjoint edge sets, so every family of pairwise
independent glides is cubic.  Regularity is still checked literally by
:func:`check_regular`.
"""
from __future__ import annotations

import json
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

from .cycles import BudgetExceeded, EvenCycle, enumerate_cycles, even_data
from .hypergraph import EdgeSet, Hypergraph, bits, popcount

DEFAULT_MAX_CUBES = 500_000
DEFAULT_MAX_STATES = 200_000


class InconsistencyError(AssertionError):
    """Two routes that must agree produced different answers."""


class GlidingSystem:
    """Glides (non-empty edge sets) with a symmetric, irreflexive independence.

    Parameters
    ----------
    glides : sequence of int
        The glides, as edge masks.  Their order defines glide ids.
    independent : callable (i, j) -> bool, optional
        Independence on glide ids.  Defaults to disjointness of the edge
        sets (the power-group system of arbitrary subsets).
    even : sequence of EvenCycle, optional
        Half data for each glide when the system comes from a hypergraph.
    """

    def __init__(self, glides: Sequence[EdgeSet],
                 independent: Optional[Callable[[int, int], bool]] = None,
                 even: Optional[Sequence[EvenCycle]] = None,
                 hypergraph: Optional[Hypergraph] = None):
        glides = tuple(int(g) for g in glides)
        if any(g == 0 for g in glides):
            raise ValueError("the unit is never a glide")
        if len(set(glides)) != len(glides):
            raise ValueError("repeated glide")
        if independent is None:
            def independent(i, j):
                return not glides[i] & glides[j]
        masks = [0] * len(glides)
        for i in range(len(glides)):
            for j in range(i + 1, len(glides)):
                a, b = bool(independent(i, j)), bool(independent(j, i))
                if a != b:
                    raise ValueError(f"independence not symmetric on glides {i}, {j}")
                if a:
                    if glides[i] & glides[j]:
                        raise ValueError(
                            f"glides {i}, {j} are independent but not disjoint")
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
        for i in range(len(glides)):
            if independent(i, i):
                raise ValueError(f"glide {i} declared independent of itself")
        self.glides = glides
        self.indep = tuple(masks)
        self.even = tuple(even) if even is not None else None
        self.hypergraph = hypergraph
        self.glide_index = {g: i for i, g in enumerate(glides)}

    @classmethod
    def from_hypergraph(cls, h: Hypergraph, max_cycles: int | None = None) -> "GlidingSystem":
        """Even cycles of ``h`` as glides; independent means vertex-disjoint."""
        kw = {} if max_cycles is None else {"limit": max_cycles}
        evens = [d for d in (even_data(h, c) for c in enumerate_cycles(h, **kw))
                 if d is not None]
        vsup = [d.vertices for d in evens]
        return cls([d.edges for d in evens],
                   independent=lambda i, j: i != j and not vsup[i] & vsup[j],
                   even=evens, hypergraph=h)

    def __len__(self):
        return len(self.glides)

    def is_independent(self, i: int, j: int) -> bool:
        return bool(self.indep[i] >> j & 1)

    def product(self, ids: Iterable[int]) -> EdgeSet:
        p = 0
        for i in ids:
            p ^= self.glides[i]
        return p

    def independent_set(self, ids: Sequence[int]) -> bool:
        return all(self.is_independent(i, j) for i, j in combinations(ids, 2))


def glide(a: EdgeSet, s: EdgeSet) -> EdgeSet:
    """The state obtained from ``a`` by gliding along ``s``."""
    return a ^ s


def cube_vertices(sys: GlidingSystem, base: EdgeSet, ids: Sequence[int]) -> list[EdgeSet]:
    verts = [base]
    for i in ids:
        g = sys.glides[i]
        verts += [v ^ g for v in verts]
    return verts


@dataclass(frozen=True, order=True)
class Cube:
    """A cube in the power group, stored by its least vertex and glide ids."""

    base: EdgeSet
    glides: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.glides)


def canonical_cube(sys: GlidingSystem, a: EdgeSet, ids: Iterable[int]) -> Cube:
    ids = tuple(sorted(ids))
    return Cube(min(cube_vertices(sys, a, ids)), ids)


@dataclass(frozen=True)
class Link:
    """The link of a vertex: glide ids and the glide sets spanning simplices."""

    vertices: tuple[int, ...]
    simplices: frozenset[frozenset[int]]

    def edges(self) -> set[frozenset[int]]:
        return {s for s in self.simplices if len(s) == 2}


class CubeComplex:
    """The glide complex of a finite state set.

    Attributes
    ----------
    system : GlidingSystem
    states : tuple of int
        The 0-cells, sorted.
    cubes_by_dim : list of list of Cube
        Cubes of each dimension, sorted; ``cubes_by_dim[0]`` are the states.
    """

    def __init__(self, system: GlidingSystem, states: Iterable[EdgeSet],
                 cubes: Iterable[Cube]):
        self.system = system
        self.states = tuple(sorted(set(states)))
        self.state_index = {a: i for i, a in enumerate(self.states)}
        by_dim: dict[int, list[Cube]] = defaultdict(list)
        for c in cubes:
            by_dim[c.dim].append(c)
        top = max(by_dim) if by_dim else -1
        self.cubes_by_dim = [sorted(by_dim.get(k, [])) for k in range(top + 1)]
        self._cube_set = {c for layer in self.cubes_by_dim for c in layer}
        self._at: dict[EdgeSet, list[Cube]] = defaultdict(list)
        for layer in self.cubes_by_dim:
            for c in layer:
                for v in cube_vertices(system, c.base, c.glides):
                    self._at[v].append(c)
        self.hypergraph = system.hypergraph

    # -- queries ------------------------------------------------------------

    def __contains__(self, cube: Cube) -> bool:
        return cube in self._cube_set

    def cubes(self) -> list[Cube]:
        return [c for layer in self.cubes_by_dim for c in layer]

    def vertices_of(self, cube: Cube) -> list[EdgeSet]:
        return cube_vertices(self.system, cube.base, cube.glides)

    def cubes_at(self, a: EdgeSet) -> list[Cube]:
        return list(self._at.get(a, ()))

    def faces(self, cube: Cube) -> list[Cube]:
        """The ``2k`` facets of a ``k``-cube."""
        out = []
        for i in cube.glides:
            rest = [j for j in cube.glides if j != i]
            out.append(canonical_cube(self.system, cube.base, rest))
            out.append(canonical_cube(self.system, cube.base ^ self.system.glides[i], rest))
        return out

    @property
    def face_incidence(self) -> dict[Cube, list[Cube]]:
        return {c: self.faces(c) for c in self.cubes() if c.dim > 0}

    def edges(self) -> list[tuple[EdgeSet, EdgeSet, int]]:
        """1-cubes as ``(a, b, glide id)`` with ``a < b``."""
        if len(self.cubes_by_dim) < 2:
            return []
        g = self.system.glides
        return [(c.base, c.base ^ g[c.glides[0]], c.glides[0]) for c in self.cubes_by_dim[1]]

    def f_vector(self) -> list[int]:
        return [len(layer) for layer in self.cubes_by_dim]

    def euler(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def dimension(self) -> int:
        return len(self.cubes_by_dim) - 1

    def components(self) -> list[list[EdgeSet]]:
        """States grouped by connected component, ordered by least state."""
        parent = {a: a for a in self.states}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, _ in self.edges():
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        groups: dict[EdgeSet, list[EdgeSet]] = defaultdict(list)
        for a in self.states:
            groups[find(a)].append(a)
        return sorted(groups.values())

    def link(self, a: EdgeSet) -> Link:
        if a not in self.state_index:
            raise KeyError("state is not a vertex of the complex")
        simplices = frozenset(frozenset(c.glides) for c in self._at.get(a, ()) if c.dim > 0)
        verts = tuple(sorted({i for s in simplices if len(s) == 1 for i in s}))
        return Link(verts, simplices)

    # -- export -------------------------------------------------------------

    def to_dict(self) -> dict:
        h = self.hypergraph
        name = (lambda m: h.edge_names(m)) if h is not None else (lambda m: list(bits(m)))
        return {
            "f_vector": self.f_vector(),
            "cubes": [
                {"base": name(c.base), "glides": list(c.glides)}
                for c in self.cubes()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self) -> str:
        h = self.hypergraph

        def label(m):
            names = h.edge_names(m) if h is not None else [str(i) for i in bits(m)]
            return "{" + ",".join(names) + "}"

        lines = ["graph X {"]
        for i, a in enumerate(self.states):
            lines.append(f'  v{i} [label="{label(a)}"];')
        for a, b, g in self.edges():
            lines.append(f'  v{self.state_index[a]} -- v{self.state_index[b]} [label="{g}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _cubes_based_at(sys: GlidingSystem, states: frozenset, a: EdgeSet,
                    max_dim: Optional[int]) -> list[Cube]:
    """Cubes in ``states`` whose least vertex is ``a``."""
    g = sys.glides
    cand = 0
    for i, s in enumerate(g):
        if (a ^ s) in states and (a ^ s) > a:
            cand |= 1 << i
    out = [Cube(a, ())]

    def extend(ids: tuple[int, ...], verts: list[EdgeSet], pool: int) -> None:
        if max_dim is not None and len(ids) >= max_dim:
            return
        for t in bits(pool):
            st = g[t]
            new = [v ^ st for v in verts]
            if all(v in states and v > a for v in new):
                nid = ids + (t,)
                out.append(Cube(a, nid))
                extend(nid, verts + new, pool & sys.indep[t] & ~((2 << t) - 1))

    extend((), [a], cand)
    return out


def _chunk_worker(args):
    sys, states, chunk, max_dim = args
    out = []
    for a in chunk:
        out += _cubes_based_at(sys, states, a, max_dim)
    return out


def build_complex(sys: GlidingSystem, states: Iterable[EdgeSet], max_dim: Optional[int] = None,
                  max_cubes: int = DEFAULT_MAX_CUBES, max_states: int = DEFAULT_MAX_STATES,
                  jobs: int = 1) -> CubeComplex:
    """All cubes of the glide complex of ``states``, up to ``max_dim``.

    A cube is generated once, from its least vertex: the glides extending it
    must keep every new vertex inside ``states`` and above the base.
    Raises :class:`BudgetExceeded` past ``max_states`` states or
    ``max_cubes`` cubes.
    """
    states = frozenset(states)
    if len(states) > max_states:
        raise BudgetExceeded(f"{len(states)} states exceed the limit of {max_states}")
    order = sorted(states)
    if jobs > 1 and len(order) > 1:
        chunks = [order[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_chunk_worker, [(sys, states, c, max_dim) for c in chunks])
            cubes = [c for part in parts for c in part]
        if len(cubes) > max_cubes:
            raise BudgetExceeded(f"more than {max_cubes} cubes")
    else:
        cubes = []
        for a in order:
            cubes += _cubes_based_at(sys, states, a, max_dim)
            if len(cubes) > max_cubes:
                raise BudgetExceeded(f"more than {max_cubes} cubes")
    return CubeComplex(sys, states, cubes)


# -- curvature conditions ---------------------------------------------------

def _neighbours(sys: GlidingSystem, states, a: EdgeSet) -> list[int]:
    return [i for i, s in enumerate(sys.glides) if (a ^ s) in states]


def check_square(sys: GlidingSystem, states: Iterable[EdgeSet],
                 ambient: Optional[Iterable[EdgeSet]] = None) -> bool:
    """Square condition on ``states`` relative to ``ambient`` (default: the whole group).

    Whenever ``a, sa, ta`` lie in ``states`` for independent ``s, t`` and
    ``sta`` lies in ``ambient``, ``sta`` must lie in ``states``.
    """
    states = frozenset(states)
    amb = None if ambient is None else frozenset(ambient)
    g = sys.glides
    for a in states:
        nb = _neighbours(sys, states, a)
        for i, j in combinations(nb, 2):
            if not sys.is_independent(i, j):
                continue
            b = a ^ g[i] ^ g[j]
            if (amb is None or b in amb) and b not in states:
                return False
    return True


def check_3cube(sys: GlidingSystem, states: Iterable[EdgeSet]) -> bool:
    """If seven vertices of a 3-cube lie in ``states``, so does the eighth."""
    return find_3cube_violation(sys, states) is None


def find_3cube_violation(sys: GlidingSystem, states: Iterable[EdgeSet]):
    states = frozenset(states)
    g = sys.glides
    for a in sorted(states):
        nb = _neighbours(sys, states, a)
        for i, j, k in combinations(nb, 3):
            if not (sys.is_independent(i, j) and sys.is_independent(i, k)
                    and sys.is_independent(j, k)):
                continue
            if all((a ^ g[x] ^ g[y]) in states for x, y in ((i, j), (i, k), (j, k))):
                if (a ^ g[i] ^ g[j] ^ g[k]) not in states:
                    return a, (i, j, k)
    return None


def _star_families(sys: GlidingSystem, states: frozenset, a: EdgeSet, budget: int):
    """Independent glide families satisfying the pairwise closure condition at ``a``."""
    g = sys.glides
    nb = _neighbours(sys, states, a)
    adj = {i: 0 for i in nb}
    for i, j in combinations(nb, 2):
        if sys.is_independent(i, j) and (a ^ g[i] ^ g[j]) in states:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    count = 0
    stack = [((), sum(1 << i for i in nb))]
    while stack:
        ids, pool = stack.pop()
        yield ids
        count += 1
        if count > budget:
            raise BudgetExceeded(f"more than {budget} star families at one state")
        for t in bits(pool):
            stack.append((ids + (t,), pool & adj[t] & ~((2 << t) - 1)))


def check_regular(sys: GlidingSystem, states: Iterable[EdgeSet],
                  budget: int = DEFAULT_MAX_CUBES) -> bool:
    """Every family satisfying the pairwise closure condition at a state is cubic.

    Cubic means the ``2^k`` subset products are pairwise distinct.
    """
    states = frozenset(states)
    for a in states:
        for ids in _star_families(sys, states, a, budget):
            if len(ids) < 3:
                continue
            products = {sys.product(t) for r in range(len(ids) + 1)
                        for t in combinations(ids, r)}
            if len(products) != 1 << len(ids):
                return False
    return True


def check_simple(x: CubeComplex) -> bool:
    """Links are simplicial complexes.

    At each vertex, distinct cubes must give distinct glide sets, every
    glide set must be pairwise independent with distinct neighbours, and
    the set of simplices must be closed under taking faces.
    """
    sys = x.system
    g = sys.glides
    for a in x.states:
        seen = set()
        for c in x.cubes_at(a):
            key = frozenset(c.glides)
            if key in seen:
                return False
            seen.add(key)
            if not sys.independent_set(c.glides):
                return False
            if len({a ^ g[i] for i in c.glides}) != len(c.glides):
                return False
        for key in seen:
            for i in key:
                if key - {i} not in seen:
                    return False
    return True


def maximal_cliques(adj: dict[int, int]) -> list[tuple[int, ...]]:
    """Maximal cliques of a graph on int vertices given by neighbour bitmasks.

    Bron-Kerbosch with pivoting; cliques are returned as sorted tuples.
    """
    out = []

    def bk(r: tuple[int, ...], p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(bits(p | x), key=lambda u: popcount(adj[u] & p))
        for v in bits(p & ~adj[pivot]):
            bk(r + (v,), p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if adj:
        bk((), sum(1 << v for v in adj), 0)
    return sorted(out)


def check_flag(x: CubeComplex) -> tuple[bool, Optional[tuple[EdgeSet, tuple[int, ...]]]]:
    """Flag condition on every link.

    Returns ``(True, None)`` or ``(False, (state, clique))`` for the first
    clique of a link 1-skeleton that does not span a simplex.
    """
    for a in x.states:
        lk = x.link(a)
        adj = {v: 0 for v in lk.vertices}
        for e in lk.edges():
            i, j = tuple(e)
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        for clique in maximal_cliques(adj):
            if len(clique) > 2 and frozenset(clique) not in lk.simplices:
                return False, (a, clique)
    return True, None


@dataclass
class NPCReport:
    """Both sides of the nonpositive-curvature criterion."""

    regular: bool
    three_cube: bool
    simple: bool
    flag: bool
    violation: Optional[tuple] = None
    f_vector: list[int] = field(default_factory=list)

    @property
    def algebraic(self) -> bool:
        return self.regular and self.three_cube

    @property
    def geometric(self) -> bool:
        return self.simple and self.flag

    @property
    def agree(self) -> bool:
        return self.algebraic == self.geometric

    @property
    def npc(self) -> bool:
        return self.geometric

    def to_dict(self) -> dict:
        return {
            "regular": self.regular,
            "three_cube": self.three_cube,
            "simple": self.simple,
            "flag": self.flag,
            "regular_and_3cube": self.algebraic,
            "simple_and_flag": self.geometric,
            "agree": self.agree,
            "f_vector": self.f_vector,
        }


def npc_verdict(sys: GlidingSystem, states: Iterable[EdgeSet], strict: bool = True,
                max_cubes: int = DEFAULT_MAX_CUBES) -> NPCReport:
    """Evaluate (regular and 3-cube) against (simple and flag) on the built complex.

    With ``strict`` a disagreement raises :class:`InconsistencyError`.
    """
    states = frozenset(states)
    x = build_complex(sys, states, max_cubes=max_cubes)
    flag, violation = check_flag(x)
    report = NPCReport(
        regular=check_regular(sys, states, budget=max_cubes),
        three_cube=check_3cube(sys, states),
        simple=check_simple(x),
        flag=flag,
        violation=violation,
        f_vector=x.f_vector(),
    )
    if strict and not report.agree:
        raise InconsistencyError(f"curvature criteria disagree: {report.to_dict()}")
    return report


# -- hulls -------------------------------------------------------------------

def glide_partitions(sys: GlidingSystem, target: EdgeSet) -> list[tuple[int, ...]]:
    """All sets of pairwise independent glides whose product is ``target``."""
    g = sys.glides
    inside = [i for i, s in enumerate(g) if s & ~target == 0]
    out = []

    def cover(rest: EdgeSet, chosen: tuple[int, ...]) -> None:
        if not rest:
            out.append(tuple(sorted(chosen)))
            return
        low = rest & -rest
        for i in inside:
            s = g[i]
            if s & low and s & ~rest == 0 and all(sys.is_independent(i, j) for j in chosen):
                cover(rest ^ s, chosen + (i,))

    cover(target, ())
    return sorted(out)


def hull(x: CubeComplex, a: EdgeSet, b: EdgeSet) -> Optional[Cube]:
    """The least cube of ``x`` containing states ``a`` and ``b``, if it exists.

    In a set-like system a cube containing both, read at ``a``, has a glide
    subset with product ``ab``; the hull exists iff exactly one independent
    glide family with that product spans a cube of ``x`` at ``a``.
    """
    if a not in x.state_index or b not in x.state_index:
        raise KeyError("state is not a vertex of the complex")
    found = [ids for ids in glide_partitions(x.system, a ^ b)
             if canonical_cube(x.system, a, ids) in x]
    if len(found) != 1:
        return None
    return canonical_cube(x.system, a, found[0])


def is_face(sys: GlidingSystem, small: Cube, big: Cube) -> bool:
    if not set(small.glides) <= set(big.glides):
        return False
    big_verts = set(cube_vertices(sys, big.base, big.glides))
    return small.base in big_verts
