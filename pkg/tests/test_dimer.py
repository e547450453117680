import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from dimerglide import (CORPUS, ComplexPoint, GlideLoop, dimer_complex, dimer_hull,
                        enumerate_dimer_coverings, evaluate, is_dimer_labeling, is_flat,
                        labeling_components, load_corpus, parse_hypergraph, random_loop)
from dimerglide.dimer import (default_base, dimer_system, flat_triples, is_dimer_covering,
                              labeling_by_name, odd_cycle_sets, shortest_path)
from dimerglide.glide import cube_vertices

from oracles import grid_components, matchings_by_subset_scan, random_graph, random_hypergraph


def idx(mask):
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


@pytest.mark.parametrize("name", CORPUS)
def test_matchings_match_subset_scan_on_corpus(name):
    h = load_corpus(name)
    assert {idx(a) for a in enumerate_dimer_coverings(h)} == set(matchings_by_subset_scan(h))


@pytest.mark.parametrize("seed", range(30))
def test_matchings_match_subset_scan_random(seed):
    rng = random.Random(seed)
    h = random_graph(rng, max_edges=12) if seed % 2 else random_hypergraph(rng)
    found = enumerate_dimer_coverings(h)
    assert found == sorted(found)
    assert {idx(a) for a in found} == set(matchings_by_subset_scan(h))
    assert all(is_dimer_covering(h, a) for a in found)


def test_empty_graph_has_the_empty_covering():
    h = parse_hypergraph({"vertices": [], "edges": []})
    assert enumerate_dimer_coverings(h) == [0]


@pytest.mark.parametrize("name, f", [
    ("C3", []), ("C5", []), ("C4", [2, 1]), ("C6", [2, 1]),
    ("theta2", [2, 1]), ("theta3", [3, 3]), ("theta4", [4, 6]), ("theta5", [5, 10]),
    ("theta6", [6, 15]), ("C4_C4", [4, 4, 1]), ("C3_C4", []), ("C5_C4", []),
    ("theta3_C4", [6, 9, 3]), ("ladder", [3, 3]), ("exact_cover3", [3, 3]),
])
def test_corpus_f_vectors(name, f):
    assert dimer_complex(load_corpus(name)).f_vector() == f


def test_theta_complex_is_complete_graph():
    for n in range(2, 7):
        x = dimer_complex(load_corpus(f"theta{n}"))
        pairs = {frozenset((a, b)) for a, b, _ in x.edges()}
        assert len(x.states) == n
        assert pairs == {frozenset((a, b)) for a in x.states for b in x.states if a != b}


@pytest.mark.parametrize("name", [n for n in CORPUS if n not in ("C3", "C5", "C3_C4", "C5_C4")])
def test_dimer_hull_is_least_cube(name):
    h = load_corpus(name)
    x = dimer_complex(h)
    for a in x.states:
        for b in x.states:
            q = dimer_hull(x, a, b)
            assert q in x
            verts = set(cube_vertices(x.system, q.base, q.glides))
            assert {a, b} <= verts
            containing = [c for c in x.cubes() if {a, b} <= set(x.vertices_of(c))]
            assert min(c.dim for c in containing) == q.dim


def test_flat_triples_of_theta3():
    h = load_corpus("theta3")
    covs = enumerate_dimer_coverings(h)
    a, b, c = covs
    assert not is_flat(h, a, b, c)
    assert is_flat(h, a, a, b)
    assert len(flat_triples(h, covs)) == 27 - 6


def test_evaluate_gives_dimer_labelings_injectively():
    h = load_corpus("theta3_C4")
    x = dimer_complex(h)
    sys_ = x.system
    grid = [Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)]
    seen = {}
    for c in x.cubes():
        for coords in product(grid, repeat=c.dim):
            lab = evaluate(sys_, ComplexPoint(c.base, c.glides, coords))
            assert is_dimer_labeling(h, lab)
            key = tuple(sorted(lab.items()))
            assert key not in seen, (c, seen.get(key))
            seen[key] = c


def test_evaluate_corners_are_coverings():
    h = load_corpus("ladder")
    x = dimer_complex(h)
    for c in x.cubes():
        for corner in product((0, 1), repeat=c.dim):
            lab = evaluate(x.system, ComplexPoint(c.base, c.glides, corner))
            state = sum(1 << e for e, v in lab.items() if v == 1)
            assert state in x.state_index
            assert all(v in (0, 1) for v in lab.values())


def test_labeling_by_name():
    h = load_corpus("C4")
    x = dimer_complex(h)
    c = x.cubes_by_dim[1][0]
    lab = labeling_by_name(h, evaluate(x.system, ComplexPoint(c.base, c.glides, (Fraction(1, 4),))))
    assert sorted(lab.values()) == ["1/4", "1/4", "3/4", "3/4"]


def test_is_dimer_labeling_rejects_three_nonzero():
    h = load_corpus("theta3")
    third = Fraction(1, 3)
    assert not is_dimer_labeling(h, {0: third, 1: third, 2: third})
    assert is_dimer_labeling(h, {0: Fraction(1, 2), 1: Fraction(1, 2), 2: Fraction(0)})


def census(h):
    return sum(len(c.complex.components()) for c in labeling_components(h))


@pytest.mark.parametrize("name", ["C3", "C4", "C5", "C3_C4", "C5_C4", "theta3", "ladder"])
def test_components_match_grid_flood_fill(name):
    h = load_corpus(name)
    assert census(h) == grid_components(h)


def test_two_triangles_joined_by_a_bridge():
    h = parse_hypergraph({"vertices": list("abcdef"), "edges": [
        {"id": "ab", "boundary": ["a", "b"]}, {"id": "bc", "boundary": ["b", "c"]},
        {"id": "ca", "boundary": ["c", "a"]}, {"id": "cd", "boundary": ["c", "d"]},
        {"id": "de", "boundary": ["d", "e"]}, {"id": "ef", "boundary": ["e", "f"]},
        {"id": "fd", "boundary": ["f", "d"]},
    ]})
    comps = labeling_components(h)
    assert [len(c.odd_cycles) for c in comps] == [0, 2]
    assert census(h) == grid_components(h) == 2


def test_odd_cycle_sets_of_c3_c4():
    h = load_corpus("C3_C4")
    sets = odd_cycle_sets(h)
    assert [len(s) for s in sets] == [0, 1]


def test_labeling_components_need_graph_mode():
    with pytest.raises(ValueError):
        labeling_components(load_corpus("exact_cover3"))


def test_glide_loop_operations():
    h = load_corpus("theta3")
    x = dimer_complex(h)
    base = default_base(x)
    loop = GlideLoop(base, (0, 2, 1))
    loop.validate(x.system, frozenset(x.states))
    assert (loop + loop.inverse()).states(x.system)[-1] == base
    with pytest.raises(ValueError):
        GlideLoop(base, (0,)).validate(x.system, frozenset(x.states))
    with pytest.raises(ValueError):
        loop + GlideLoop(x.states[1], ())


def test_shortest_path():
    h = load_corpus("C4_C4")
    x = dimer_complex(h)
    a, b = x.states[0], x.states[-1]
    steps = shortest_path(x, a, b)
    assert len(steps) == 2
    assert GlideLoop(a, tuple(steps)).states(x.system)[-1] == b


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from(["ladder", "theta5", "C4_C4", "theta3_C4"]))
def test_random_loops_close(seed, name):
    x = dimer_complex(load_corpus(name))
    loop = random_loop(x, x.states[0], random.Random(seed))
    loop.validate(x.system, frozenset(x.states))


def test_dimer_system_halves_everywhere():
    sys_ = dimer_system(load_corpus("ladder"))
    assert len(sys_) == 3 and all(len(d.halves) == 2 for d in sys_.even)
