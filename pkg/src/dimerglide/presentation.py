"""Finite group presentations of glide and dimer groups.

A word is a tuple of letters ``(generator index, exponent)`` with exponent
``+1`` or ``-1``.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional, Sequence

from .dimer import is_flat
from .glide import CubeComplex, cube_vertices, hull
from .hypergraph import EdgeSet

Letter = tuple[int, int]
Word = tuple[Letter, ...]


class PresentationError(ValueError):
    pass


def inverse(word: Sequence[Letter]) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def free_reduce(word: Sequence[Letter]) -> Word:
    out: list[Letter] = []
    for g, e in word:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def cyclic_reduce(word: Sequence[Letter]) -> Word:
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0] == (w[-1][0], -w[-1][1]):
        w = w[1:-1]
    return tuple(w)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        n = len(self.generators)
        for r in self.relators:
            for g, e in r:
                if not 0 <= g < n or e not in (1, -1):
                    raise PresentationError(f"bad letter {(g, e)!r} in relator")

    def to_dict(self) -> dict:
        return {
            "generators": list(self.generators),
            "relators": [[[self.generators[g], e] for g, e in r] for r in self.relators],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def word_str(self, word: Sequence[Letter]) -> str:
        if not word:
            return "1"
        return " ".join(self.generators[g] + ("" if e == 1 else "^-1") for g, e in word)


# -- Smith normal form -------------------------------------------------------

def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Non-zero invariant factors of an integer matrix, each dividing the next."""
    a = [list(map(int, row)) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < rows and t < cols:
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < best):
                    best, pivot = abs(a[i][j]), (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                # the pivot must divide the rest of the block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, i, j = min(cand)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def abelianization(p: Presentation) -> tuple[int, list[int]]:
    """``(betti number, torsion coefficients > 1)`` of the abelianized group."""
    n = len(p.generators)
    matrix = []
    for r in p.relators:
        row = [0] * n
        for g, e in r:
            row[g] += e
        if any(row):
            matrix.append(row)
    diag = smith_diagonal(matrix) if matrix else []
    return n - len(diag), [d for d in diag if d > 1]


# -- Tietze reduction --------------------------------------------------------

def _substitute(word: Sequence[Letter], g: int, image: Word) -> Word:
    out = []
    for x, e in word:
        if x == g:
            out.extend(image if e == 1 else inverse(image))
        else:
            out.append((x, e))
    return tuple(out)


def tietze_reduce(p: Presentation) -> Presentation:
    """Eliminate generators defined by relators of length at most two.

    Relators are cyclically reduced, trivial and duplicate relators dropped
    (a relator and its inverse or cyclic shifts count as duplicates).  A
    relator ``x`` kills ``x``; a relator ``x^a y^b`` with ``x != y``
    rewrites ``x`` as a power of ``y``.  Remaining generators are renumbered.
    """
    alive = list(range(len(p.generators)))
    rels = [cyclic_reduce(r) for r in p.relators]
    while True:
        rels = _dedupe([r for r in rels if r])
        target = None
        for r in rels:
            if len(r) == 1:
                target = (r[0][0], ())
                break
            if len(r) == 2 and r[0][0] != r[1][0]:
                (x, a), (y, b) = r
                # x^a y^b = 1  =>  x = y^(-a*b)
                target = (x, ((y, -a * b),))
                break
        if target is None:
            break
        g, image = target
        rels = [cyclic_reduce(_substitute(r, g, image)) for r in rels]
        alive.remove(g)
    renum = {g: k for k, g in enumerate(alive)}
    return Presentation(tuple(p.generators[g] for g in alive),
                        tuple(tuple((renum[g], e) for g, e in r) for r in rels))


def _canonical_relator(r: Word) -> Word:
    variants = []
    for w in (r, inverse(r)):
        for k in range(len(w)):
            variants.append(w[k:] + w[:k])
    return min(variants)


def _dedupe(rels: list[Word]) -> list[Word]:
    seen = set()
    out = []
    for r in rels:
        key = _canonical_relator(r)
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out


# -- presentations of glide groups ------------------------------------------

def _pair_presentation(states: Sequence[EdgeSet], names, triples, base: Optional[EdgeSet]) -> Presentation:
    idx = {a: i for i, a in enumerate(states)}
    n = len(states)

    def y(a, b):
        return idx[a] * n + idx[b]

    gens = tuple(f"y[{names(a)},{names(b)}]" for a in states for b in states)
    rels = [((y(a, b), 1), (y(b, c), 1), (y(a, c), -1)) for a, b, c in triples]
    if base is not None:
        rels += [((y(base, a), 1),) for a in states]
    return Presentation(gens, tuple(rels))


def _state_namer(x: CubeComplex):
    h = x.hypergraph
    if h is None:
        return lambda a: format(a, "b")
    return lambda a: "{" + ",".join(h.edge_names(a)) + "}"


def dimer_presentation(x: CubeComplex, base: EdgeSet, groupoid: bool = False) -> Presentation:
    """Generators ``y[A,B]`` over ordered pairs of coverings.

    Relators ``y[A,B] y[B,C] y[A,C]^-1`` for every flat triple, degenerate
    ones included, and ``y[A0,A]`` for every covering ``A`` unless
    ``groupoid`` is set.
    """
    if base not in x.state_index:
        raise PresentationError("basepoint is not a covering")
    if len(x.components()) != 1:
        raise PresentationError("complex is not connected")
    h = x.hypergraph
    states = x.states
    triples = [(a, b, c) for a, b, c in product(states, repeat=3) if is_flat(h, a, b, c)]
    return _pair_presentation(states, _state_namer(x), triples, None if groupoid else base)


def cube_triples(x: CubeComplex) -> set[tuple[EdgeSet, EdgeSet, EdgeSet]]:
    """All ordered triples of states lying in a common cube of ``x``."""
    out = set()
    for c in x.cubes():
        verts = cube_vertices(x.system, c.base, c.glides)
        out.update(product(verts, repeat=3))
    return out


def glide_presentation(x: CubeComplex, base: EdgeSet, groupoid: bool = False) -> Presentation:
    """Pair presentation for a general state set whose 2-element subsets have hulls.

    Raises :class:`PresentationError` when some pair has no hull.
    """
    if base not in x.state_index:
        raise PresentationError("basepoint is not a state")
    for a, b in combinations(x.states, 2):
        if hull(x, a, b) is None:
            raise PresentationError("hull hypothesis fails for some pair of states")
    triples = sorted(cube_triples(x))
    return _pair_presentation(x.states, _state_namer(x), triples, None if groupoid else base)


def pi1_spanning_tree(x: CubeComplex, base: EdgeSet) -> Presentation:
    """Edge-path presentation of the fundamental group at ``base``.

    Generators are the 1-cubes of the component outside a breadth-first
    spanning tree, oriented from the smaller state to the larger; relators
    are the boundary words of the 2-cubes.
    """
    if base not in x.state_index:
        raise PresentationError("basepoint is not a state")
    g = x.system.glides
    adj: dict[EdgeSet, list[EdgeSet]] = {a: [] for a in x.states}
    for a, b, _ in x.edges():
        adj[a].append(b)
        adj[b].append(a)
    seen = {base}
    tree = set()
    queue = deque([base])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                tree.add((min(u, v), max(u, v)))
                queue.append(v)
    gen_edges = [(a, b) for a, b, _ in x.edges() if a in seen and (a, b) not in tree]
    gidx = {e: i for i, e in enumerate(gen_edges)}
    name = _state_namer(x)

    def letter(u, v):
        key = (min(u, v), max(u, v))
        if key not in gidx:
            return None
        return (gidx[key], 1 if u < v else -1)

    rels = []
    if len(x.cubes_by_dim) > 2:
        for c in x.cubes_by_dim[2]:
            if c.base not in seen:
                continue
            s, t = (g[i] for i in c.glides)
            a = c.base
            loop = [a, a ^ s, a ^ s ^ t, a ^ t, a]
            word = tuple(l for l in (letter(u, v) for u, v in zip(loop, loop[1:])) if l)
            rels.append(word)
    gens = tuple(f"x[{name(a)},{name(b)}]" for a, b in gen_edges)
    return Presentation(gens, tuple(rels))
