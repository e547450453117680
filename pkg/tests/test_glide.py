import random
import sys
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from dimerglide import (BudgetExceeded, Cube, GlidingSystem, InconsistencyError, build_complex,
                        canonical_cube, check_3cube, check_flag, check_regular, check_simple,
                        check_square, glide, hull, npc_verdict)
from dimerglide.glide import find_3cube_violation, glide_partitions, is_face, maximal_cliques

from oracles import cubes_by_subset_scan


def to_sets(mask):
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def random_system(rng, n_edges=8, n_glides=6, p_indep=0.7):
    glides = set()
    while len(glides) < n_glides:
        glides.add(rng.randrange(1, 1 << n_edges))
    glides = sorted(glides)
    indep = {(i, j) for i, j in combinations(range(n_glides), 2)
             if not glides[i] & glides[j] and rng.random() < p_indep}
    return GlidingSystem(glides, independent=lambda i, j: (min(i, j), max(i, j)) in indep)


def c4_cube(k):
    """Power group on ``4k`` letters with ``k`` disjoint 4-letter glides."""
    return GlidingSystem([0b1111 << 4 * i for i in range(k)])


def test_glide_is_symmetric_difference():
    assert glide(0b1100, 0b1010) == 0b0110


@pytest.mark.parametrize("glides, indep, msg", [
    ([0], None, "unit"),
    ([1, 1], None, "repeated"),
    ([1, 2], lambda i, j: i < j, "symmetric"),
    ([3, 6], lambda i, j: i != j, "not disjoint"),
    ([1, 2], lambda i, j: True, "itself"),
])
def test_system_validation(glides, indep, msg):
    with pytest.raises(ValueError, match=msg):
        GlidingSystem(glides, independent=indep)


def test_default_independence_is_disjointness():
    s = GlidingSystem([0b0011, 0b1100, 0b0110])
    assert s.is_independent(0, 1) and not s.is_independent(0, 2)
    assert s.product([0, 1, 2]) == 0b0110 ^ 0b1111


def test_canonical_cube_uses_least_vertex():
    s = c4_cube(2)
    c = canonical_cube(s, 0b1111_1111, [1, 0])
    assert c == Cube(0, (0, 1)) and c.dim == 2


@pytest.mark.parametrize("seed", range(60))
def test_complex_matches_subset_scan(seed):
    rng = random.Random(seed)
    sys_ = random_system(rng, n_edges=rng.choice((6, 8)), n_glides=rng.randint(3, 7))
    universe = list(range(1 << 6)) if seed % 2 else None
    if universe is None:
        # states closed-ish under glides so that higher cubes show up
        seeds = [rng.randrange(1 << 8) for _ in range(2)]
        pool = set(seeds)
        for _ in range(3):
            pool |= {a ^ g for a in pool for g in sys_.glides}
        universe = sorted(pool)
    states = set(rng.sample(universe, min(len(universe), rng.randint(1, 64))))
    x = build_complex(sys_, states)
    got = {(to_sets(c.base), c.glides) for c in x.cubes()}
    expected = cubes_by_subset_scan([to_sets(g) for g in sys_.glides], sys_.is_independent,
                                    {to_sets(a) for a in states})
    assert got == expected


def test_parallel_build_is_identical():
    rng = random.Random(5)
    sys_ = c4_cube(4)
    states = {a for a in range(1 << 16) if rng.random() < 0.002} | {0}
    states |= {a ^ g for a in list(states) for g in sys_.glides}
    one = build_complex(sys_, states)
    two = build_complex(sys_, states, jobs=3)
    assert one.cubes() == two.cubes()
    assert one.to_json() == two.to_json()


def test_budgets():
    sys_ = c4_cube(3)
    full = [sys_.product(ids) for r in range(4) for ids in combinations(range(3), r)]
    assert build_complex(sys_, full).f_vector() == [8, 12, 6, 1]
    with pytest.raises(BudgetExceeded):
        build_complex(sys_, full, max_cubes=10)
    with pytest.raises(BudgetExceeded):
        build_complex(sys_, full, max_states=7)
    assert build_complex(sys_, full, max_dim=1).f_vector() == [8, 12]


def test_faces_and_euler():
    sys_ = c4_cube(3)
    full = [sys_.product(ids) for r in range(4) for ids in combinations(range(3), r)]
    x = build_complex(sys_, full)
    top = x.cubes_by_dim[3][0]
    assert len(x.faces(top)) == 6 and all(f in x for f in x.faces(top))
    assert x.euler() == 1 and x.dimension() == 3
    assert len(x.components()) == 1
    assert set(x.face_incidence) == set(x.cubes()) - set(x.cubes_by_dim[0])


def seven_corners(k=3):
    sys_ = c4_cube(k)
    corners = [sys_.product(ids) for r in range(3) for ids in combinations(range(3), r)]
    return sys_, corners


def test_seven_corner_counterexample_fails_both_sides():
    sys_, corners = seven_corners()
    assert len(corners) == 7
    assert not check_3cube(sys_, corners)
    a, ids = find_3cube_violation(sys_, corners)
    assert a == 0 and ids == (0, 1, 2)
    report = npc_verdict(sys_, corners)
    assert report.regular and report.simple
    assert not report.three_cube and not report.flag
    assert not report.algebraic and not report.geometric and report.agree
    assert report.violation[0] == 0 and report.violation[1] == (0, 1, 2)


def test_adding_the_eighth_corner_restores_both_sides():
    sys_, corners = seven_corners()
    report = npc_verdict(sys_, corners + [sys_.product([0, 1, 2])])
    assert report.npc and report.algebraic
    assert report.f_vector == [8, 12, 6, 1]


def test_disjoint_independence_makes_families_cubic():
    # independence forces disjointness, so subset products never collide
    sys_ = GlidingSystem([0b0011, 0b1100, 0b0110])
    assert check_regular(sys_, {0, 0b0011, 0b1100, 0b1111, 0b0110})


def test_square_condition():
    sys_ = c4_cube(2)
    assert not check_square(sys_, {0, 0b1111, 0b1111_0000})
    assert check_square(sys_, {0, 0b1111, 0b1111_0000, 0xFF})
    # relative to an ambient set that lacks the fourth corner the square is fine
    assert check_square(sys_, {0, 0b1111, 0b1111_0000}, ambient={0, 0b1111, 0b1111_0000})


def test_diagonal_glide_adds_an_edge_but_no_square():
    sys_ = GlidingSystem([0b0011, 0b1100, 0b1111])
    x = build_complex(sys_, {0, 0b0011, 0b1100, 0b1111})
    assert check_simple(x)
    assert x.f_vector() == [4, 6, 1]


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32))
def test_maximal_cliques_match_networkx(seed):
    rng = random.Random(seed)
    n = rng.randint(0, 9)
    g = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(1 << 30))
    adj = {v: sum(1 << u for u in g[v]) for v in g}
    expected = sorted(tuple(sorted(c)) for c in nx.find_cliques(g)) if n else []
    assert maximal_cliques(adj) == expected


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_npc_sides_agree_on_random_cube_state_sets(seed):
    rng = random.Random(seed)
    k = rng.randint(2, 4)
    sys_ = c4_cube(k)
    base = rng.randrange(1 << 4 * k)
    orbit = [base ^ sys_.product(ids) for r in range(k + 1) for ids in combinations(range(k), r)]
    states = [a for a in orbit if rng.random() < 0.7]
    report = npc_verdict(sys_, states)
    assert report.agree


def test_strict_mode_raises_on_disagreement(monkeypatch):
    glide_mod = sys.modules["dimerglide.glide"]
    sys_, corners = seven_corners()
    monkeypatch.setattr(glide_mod, "check_3cube", lambda s, st: True)
    with pytest.raises(InconsistencyError):
        npc_verdict(sys_, corners)
    assert not npc_verdict(sys_, corners, strict=False).agree


def test_check_flag_reports_witness():
    sys_, corners = seven_corners()
    x = build_complex(sys_, corners)
    ok, (a, clique) = check_flag(x)
    assert not ok and a == 0 and clique == (0, 1, 2)


def test_glide_partitions_and_hull():
    sys_ = c4_cube(3)
    full = [sys_.product(ids) for r in range(4) for ids in combinations(range(3), r)]
    x = build_complex(sys_, full)
    assert glide_partitions(sys_, sys_.product([0, 2])) == [(0, 2)]
    q = hull(x, 0b1111, 0b1111 << 8)
    assert q == Cube(0, (0, 2))
    assert hull(x, 0, 0) == Cube(0, ())
    assert is_face(sys_, q, x.cubes_by_dim[3][0])
    assert not is_face(sys_, Cube(0b1111 << 4, (0,)), Cube(0, (0, 2)))
    with pytest.raises(KeyError):
        hull(x, 0, 12345)


def test_hull_absent_for_disconnected_pair():
    sys_ = c4_cube(2)
    x = build_complex(sys_, {0, 0xFF})
    assert hull(x, 0, 0xFF) is None


def test_complex_exports():
    sys_ = c4_cube(2)
    x = build_complex(sys_, {0, 0x0F, 0xF0, 0xFF})
    d = x.to_dict()
    assert d["f_vector"] == [4, 4, 1]
    assert len(d["cubes"]) == 9
    dot = x.to_dot()
    assert dot.startswith("graph X {") and dot.count("--") == 4
    lk = x.link(0)
    assert lk.vertices == (0, 1) and frozenset({0, 1}) in lk.simplices
