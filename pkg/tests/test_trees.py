"""Tree and forest invariants against subset-enumeration oracles."""

import random

import pytest

from oracles import (
    brute_cover,
    brute_independence,
    brute_independent_cover_min,
    brute_matching,
    enumerate_forests,
    enumerate_trees,
    random_tree,
)
from turanlab import (
    build_graph,
    complete_graph,
    cycle_graph,
    double_broom,
    matching_graph,
    path_graph,
    star_graph,
)
from turanlab.errors import NotBipartiteError, NotTreeError, TooLargeError
from turanlab.trees import (
    EXHAUSTIVE_LIMIT,
    analyze_tree,
    bipartition,
    covering_number,
    degree_stratum,
    independence_number,
    independent_covering_number,
    is_bipartite,
    matching_number,
)


def test_invariants_on_all_small_trees():
    for n in range(1, 11):
        for t in enumerate_trees(n):
            alpha = independence_number(t)
            beta = covering_number(t)
            nu = matching_number(t)
            assert alpha == brute_independence(t)
            assert beta == brute_cover(t)
            assert nu == brute_matching(t)
            assert alpha + beta == n
            assert beta == nu


def test_invariants_on_all_small_forests():
    for n in range(1, 9):
        for f in enumerate_forests(n):
            assert independence_number(f) == brute_independence(f)
            assert matching_number(f) == brute_matching(f)
            assert independent_covering_number(f) == brute_independent_cover_min(f)


def test_invariants_on_nonforest_graphs():
    cases = [
        cycle_graph(5),
        cycle_graph(6),
        complete_graph(6),
        build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]),
    ]
    for g in cases:
        assert independence_number(g) == brute_independence(g)
        assert covering_number(g) == brute_cover(g)
        assert matching_number(g) == brute_matching(g)


def test_exhaustive_fallback_size_cap():
    with pytest.raises(TooLargeError):
        independence_number(cycle_graph(EXHAUSTIVE_LIMIT + 1))
    # forests above the cap stay exact through the DP
    assert independence_number(path_graph(50)) == 25


def test_bipartition_shape():
    bip = bipartition(double_broom(2, 2, 2))
    assert len(bip.class_a) <= len(bip.class_b)
    assert len(bip.class_a) + len(bip.class_b) == 6
    # every edge crosses the classes
    b = double_broom(2, 2, 2)
    for u, v in b.edges():
        assert (u in bip.class_a) != (v in bip.class_a)


def test_bipartition_tie_break_and_k1():
    # equal class sizes pick the lexicographically smaller side as class_a
    bip = bipartition(path_graph(4))
    assert sorted(bip.class_a) < sorted(bip.class_b)
    assert len(bip.class_a) == len(bip.class_b) == 2
    # a single vertex: one-element class_a, empty class_b
    bip1 = bipartition(path_graph(1))
    assert sorted(bip1.class_a) == [0]
    assert bip1.class_b == frozenset()


def test_bipartition_rejects_odd_cycle():
    assert not is_bipartite(cycle_graph(5))
    assert is_bipartite(cycle_graph(6))
    with pytest.raises(NotBipartiteError):
        bipartition(cycle_graph(7))
    with pytest.raises(NotBipartiteError):
        independent_covering_number(cycle_graph(5))


def test_independent_covering_hand_values():
    assert independent_covering_number(path_graph(4)) == 2
    assert independent_covering_number(star_graph(6)) == 1
    assert independent_covering_number(matching_graph(10)) == 5
    assert independent_covering_number(build_graph(3, [])) == 0
    # isolated vertices contribute nothing
    assert independent_covering_number(build_graph(4, [(0, 1)])) == 1


def test_degree_stratum_hand_cases():
    # star: class_a is the center; leaves see only one tight vertex, so
    # there are no hubs and the slack is undefined
    s = degree_stratum(star_graph(4))
    assert s.delta_a == 3
    assert s.tight == frozenset({0})
    assert s.hubs == frozenset()
    assert s.hub_slack is None
    # double broom: class_a is one center plus the opposite leaves; the
    # leaves are tight, and the far center sees both of its leaves
    d = degree_stratum(double_broom(2, 2, 2))
    assert d.delta_a == 1
    assert d.tight == frozenset({4, 5})
    assert d.hubs == frozenset({1})
    assert d.hub_slack == 1


def test_degree_stratum_with_hubs():
    # center y adjacent to three degree-3 vertices, each padded with two
    # leaves: class_a is the degree-3 layer, y sees three tight vertices,
    # and the slack is its degree minus two
    edges = [(0, 1), (0, 2), (0, 3)]
    nxt = 4
    for a in (1, 2, 3):
        edges += [(a, nxt), (a, nxt + 1)]
        nxt += 2
    t = build_graph(10, edges)
    s = degree_stratum(t)
    assert s.delta_a == 3
    assert s.tight == frozenset({1, 2, 3})
    assert s.hubs == frozenset({0})
    assert s.hub_slack == 1


def test_degree_stratum_requires_tree():
    with pytest.raises(NotTreeError):
        degree_stratum(cycle_graph(4))
    with pytest.raises(NotTreeError):
        degree_stratum(matching_graph(4))


def test_analyze_tree_consistency_random():
    rng = random.Random(20260817)
    for _ in range(100):
        t = random_tree(rng.randrange(2, 17), rng)
        an = analyze_tree(t)
        assert an.alpha + an.beta == t.n
        assert an.beta == an.nu
        assert an.q == len(an.bip.class_a)
        assert an.alpha >= len(an.bip.class_b)
        assert an.delta_a == min(t.degree(v) for v in an.bip.class_a)


def test_analyze_tree_k1_degenerate():
    # a single vertex has no edges, so the empty set is a covering
    an = analyze_tree(path_graph(1))
    assert an.degenerate
    assert an.alpha == 1
    assert an.beta == 0
    assert an.q == 0


def test_analyze_tree_rejects_non_trees():
    with pytest.raises(NotTreeError):
        analyze_tree(cycle_graph(4))
    with pytest.raises(NotTreeError):
        analyze_tree(matching_graph(4))


def test_double_broom_analysis_example():
    an = analyze_tree(double_broom(2, 2, 2))
    assert an.alpha == 4
    assert an.beta == 2
    assert an.nu == 2
    assert an.q == 3
    assert an.delta_a == 1
