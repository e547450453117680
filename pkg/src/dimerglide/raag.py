"""Right-angled Artin groups, typing words of loops and the ``u`` homomorphism.

Words use the same letter format as :mod:`dimerglide.presentation`:
``(generator index, +1 or -1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .dimer import GlideLoop
from .glide import GlidingSystem
from .hypergraph import EdgeSet, Hypergraph, bits

Letter = tuple[int, int]
Word = tuple[Letter, ...]


class RAAG:
    """A right-angled Artin group given by generator names and commuting pairs."""

    def __init__(self, generators: Sequence[str], commuting: Iterable[tuple[int, int]]):
        self.generators = tuple(generators)
        n = len(self.generators)
        comm = [0] * n
        for i, j in commuting:
            if i == j:
                raise ValueError("commutation relation must be irreflexive")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"unknown generator in pair {(i, j)!r}")
            comm[i] |= 1 << j
            comm[j] |= 1 << i
        self.comm = tuple(comm)

    def commute(self, i: int, j: int) -> bool:
        return bool(self.comm[i] >> j & 1)

    def _check(self, word: Sequence[Letter]) -> None:
        n = len(self.generators)
        for g, e in word:
            if not 0 <= g < n or e not in (1, -1):
                raise ValueError(f"unknown generator or bad exponent in letter {(g, e)!r}")

    def reduce(self, word: Sequence[Letter]) -> list[Letter]:
        """Cancel letter pairs ``x^e ... x^-e`` separated only by letters commuting with ``x``."""
        self._check(word)
        out: list[Letter] = []
        for g, e in word:
            # scan back for a cancelling partner across commuting letters
            k = len(out) - 1
            while k >= 0 and out[k][0] != g and self.commute(out[k][0], g):
                k -= 1
            if k >= 0 and out[k] == (g, -e):
                del out[k]
            else:
                out.append((g, e))
        return out

    def normal_form(self, word: Sequence[Letter]) -> Word:
        """Lexicographically least reduced representative.

        After cancellation, letters are emitted greedily: at each step the
        least letter that can be shuffled to the front (every earlier letter
        commutes with it) is taken.  Reduced words are equal in the group
        iff they differ by commutations, so the result is canonical, and it
        is empty iff ``word`` represents the identity.
        """
        rest = self.reduce(word)
        out = []
        while rest:
            best = None
            blocked = 0
            for k, (g, e) in enumerate(rest):
                if not blocked >> g & 1:
                    if best is None or (g, e) < rest[best]:
                        best = k
                # a letter blocks every generator it fails to commute with, itself included
                blocked |= ~self.comm[g] | 1 << g
                if blocked == -1:
                    break
            out.append(rest.pop(best))
        return tuple(out)

    def is_identity(self, word: Sequence[Letter]) -> bool:
        return not self.reduce(word)

    def equal(self, w1: Sequence[Letter], w2: Sequence[Letter]) -> bool:
        return self.normal_form(w1) == self.normal_form(w2)

    def word_str(self, word: Sequence[Letter]) -> str:
        if not word:
            return "1"
        return " ".join(self.generators[g] + ("" if e == 1 else "^-1") for g, e in word)


def artin_group(sys: GlidingSystem) -> RAAG:
    """Generators ``g0, g1, ...`` for the glides; independent glides commute."""
    pairs = [(i, j) for i in range(len(sys)) for j in bits(sys.indep[i]) if i < j]
    return RAAG([f"g{i}" for i in range(len(sys))], pairs)


def edge_artin_group(h: Hypergraph) -> RAAG:
    """Generators ``h[e]`` for the edges; edges with no common vertex commute."""
    ev = h.edge_vertices
    pairs = [(i, j) for i in range(h.n_edges) for j in range(i + 1, h.n_edges)
             if not ev[i] & ev[j]]
    return RAAG([f"h[{e}]" for e in h.edge_ids], pairs)


@dataclass(frozen=True)
class Orientation:
    """A distinguished half for each even-cycle glide, keyed by glide id.

    Every 1-cell of the complex points towards the endpoint containing the
    distinguished half of its glide.
    """

    halves: Mapping[int, EdgeSet]

    @classmethod
    def canonical(cls, sys: GlidingSystem) -> "Orientation":
        """Half 0 (the half holding the smallest edge) of every cycle."""
        return cls({i: d.halves[0] for i, d in enumerate(sys.even)})

    @classmethod
    def from_elements(cls, sys: GlidingSystem, elements: Mapping[int, int]) -> "Orientation":
        """Orientation from a chosen edge index inside each glide (default: its smallest edge)."""
        out = {}
        for i, d in enumerate(sys.even):
            e = elements.get(i, (d.edges & -d.edges).bit_length() - 1)
            if not d.edges >> e & 1:
                raise ValueError(f"edge {e} does not belong to glide {i}")
            out[i] = d.halves[0] if d.halves[0] >> e & 1 else d.halves[1]
        return cls(out)

    def flipped(self, sys: GlidingSystem, glide_id: int) -> "Orientation":
        halves = dict(self.halves)
        halves[glide_id] = sys.glides[glide_id] & ~halves[glide_id]
        return Orientation(halves)

    def validate(self, sys: GlidingSystem) -> None:
        for i, half in self.halves.items():
            if half not in sys.even[i].halves:
                raise ValueError(f"chosen set is not a half of glide {i}")


def typing_word(sys: GlidingSystem, loop: GlideLoop, orientation: Orientation,
                states=None) -> Word:
    """Signed glide letters read along a loop.

    A step along glide ``s`` contributes ``g_s`` when the arrival state
    contains the distinguished half of ``s``, and ``g_s^-1`` otherwise.
    """
    if states is not None:
        loop.validate(sys, states)
    path = loop.states(sys)
    word = []
    for k, i in enumerate(loop.steps):
        try:
            half = orientation.halves[i]
        except KeyError:
            raise ValueError(f"no distinguished half for glide {i}") from None
        arrive = path[k + 1]
        word.append((i, 1 if arrive & half == half else -1))
    return tuple(word)


def u_word(sys: GlidingSystem, word: Sequence[Letter], halves: Orientation) -> Word:
    """Image under ``g_s -> prod_{e in s \\ s'} h_e^-1 prod_{e in s'} h_e``.

    ``s'`` is the distinguished half of ``s``.  Edge letters are indexed by
    edge index, matching :func:`edge_artin_group`.
    """
    out: list[Letter] = []
    for i, e in word:
        try:
            half = halves.halves[i]
        except KeyError:
            raise ValueError(f"no distinguished half for glide {i}") from None
        rest = sys.glides[i] & ~half
        image = [(k, -1) for k in bits(rest)] + [(k, 1) for k in bits(half)]
        if e == -1:
            image = [(k, -x) for k, x in reversed(image)]
        out.extend(image)
    return tuple(out)


def typing_identity(sys: GlidingSystem, loop: GlideLoop, orientation: Orientation,
                    b: Optional[RAAG] = None) -> tuple[Word, Word, bool]:
    """``(typing word, its u-image in normal form, image is trivial)``."""
    h = sys.hypergraph
    b = b or edge_artin_group(h)
    mu = typing_word(sys, loop, orientation)
    image = b.normal_form(u_word(sys, mu, orientation))
    return mu, image, not image
