# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.

"""Test the star counting engines against each other and against brute force

"""
import random
from itertools import combinations
from math import comb
import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers
from hkstars import polynomial
from hkstars.exceptions import (EngineMismatchError, EngineNotApplicableError,
                                NotATreeError)
from hkstars.families import gen_path, gen_prufer_tree, gen_sunlet, gen_tm
from hkstars.graph import build_graph
from hkstars.star_count import (Engine, StarTable, check_engines,
                                compare_tables, count_branching,
                                count_tree_dp, enumerate_independent_sets,
                                independence_number, pick_engine,
                                star_size_oracle, star_table)
from tests.src import C4, K13, corpus, to_networkx

# pragma pylint: disable=missing-docstring

SEEDS = integers(min_value=0, max_value=2 ** 32)


def random_tree(seed, high=12):
    rng = random.Random(seed)
    return gen_prufer_tree(rng.randint(2, high), rng)


def brute_counts(graph):
    """Count independent k-sets by testing every vertex subset"""
    nx_graph = to_networkx(graph)
    counts = []
    for k in range(graph.n + 1):
        counts.append(sum(1 for subset in combinations(graph.vertices, k)
                          if nx.is_empty(nx_graph.subgraph(subset))))
    return polynomial.trim(counts)


def test_p4_oracle_table():
    table = star_table(gen_path(4), Engine.ORACLE)
    assert table.counts == (1, 4, 3)
    assert table.stars == ((0, 1, 2), (0, 1, 1), (0, 1, 1), (0, 1, 2))
    assert list(table.rows())[:2] == [(0, 1, 1), (0, 2, 2)]


def test_c4_counts():
    assert count_branching(C4) == (1, 4, 2)
    table = star_table(C4)
    assert table.stars == ((0, 1, 1),) * 4


def test_k13_table():
    table = star_table(K13, Engine.TREEDP)
    assert table.counts == (1, 4, 3, 1)
    assert table.stars[0] == (0, 1, 0, 0)
    assert table.stars[1] == (0, 1, 2, 1)


def test_two_triangles():
    table = star_table(corpus()["two_triangles"], Engine.BRANCHING)
    assert table.counts == (1, 6, 9)
    assert set(table.stars) == {(0, 1, 3)}


def test_edgeless_and_empty_graphs():
    table = star_table(build_graph(3, []))
    assert table.counts == polynomial.binomial(3)
    assert table.stars == ((0, 1, 2, 1),) * 3
    empty = star_table(build_graph(0, []))
    assert empty.counts == (1,)
    assert empty.stars == ()
    assert empty.alpha == 0


def test_enumeration_order():
    sets = enumerate_independent_sets(gen_sunlet(3), 2)
    assert sets == sorted(sets)
    assert len(sets) == 9
    assert star_size_oracle(gen_sunlet(3), 0, 2) == 2


def test_tm_star_at_v0_is_closed_form():
    for m in range(1, 6):
        table = star_table(gen_tm(m))
        for k in range(1, table.alpha + 1):
            assert table.entry(0, k) == comb(2 * m, k - 1) * 2 ** (k - 1)


def test_t3_exact_values():
    table = star_table(gen_tm(3))
    leaf = 9
    assert (table.entry(0, 4), table.entry(leaf, 4)) == (160, 169)
    assert (table.entry(0, 5), table.entry(leaf, 5)) == (240, 233)
    assert (table.entry(0, 6), table.entry(leaf, 6)) == (192, 166)
    assert (table.entry(0, 7), table.entry(leaf, 7)) == (64, 49)


def test_t2_exact_values():
    table = star_table(gen_tm(2))
    assert (table.entry(0, 5), table.entry(7, 5)) == (16, 17)


def test_independence_number():
    assert independence_number(gen_tm(3)) == 8
    assert independence_number(gen_sunlet(6)) == 6
    assert independence_number(gen_path(7)) == 4
    assert independence_number(C4) == 2


def test_tree_dp_on_long_path_is_exact():
    inside, outside = count_tree_dp(gen_path(100), 0)
    fib = [0, 1]
    while len(fib) < 103:
        fib.append(fib[-1] + fib[-2])
    assert sum(polynomial.add(inside, outside)) == fib[102]
    assert fib[102] > 2 ** 64


def test_tree_dp_needs_tree():
    with pytest.raises(NotATreeError):
        count_tree_dp(C4, 0)


def test_tree_engine_on_cycle_is_not_applicable():
    with pytest.raises(EngineNotApplicableError) as info:
        star_table(C4, Engine.TREEDP)
    assert "treedp" in str(info.value)
    assert not isinstance(info.value, EngineMismatchError)


def test_pick_engine():
    assert pick_engine(gen_tm(2)) is Engine.TREEDP
    assert pick_engine(gen_sunlet(4)) is Engine.BRANCHING


def test_truncated_table():
    full = star_table(gen_tm(3))
    cut = star_table(gen_tm(3), k_max=3)
    assert cut.alpha == 3
    for v in range(15):
        for k in range(4):
            assert cut.entry(v, k) == full.entry(v, k)


def test_memo_does_not_change_counts():
    sunlet = gen_sunlet(6)
    assert count_branching(sunlet, memo_max_n=0) == count_branching(sunlet)


def lucas(n):
    pair = (2, 1)
    for _ in range(n):
        pair = (pair[1], pair[0] + pair[1])
    return pair[0]


def test_branching_on_large_sunlet_is_exact():
    counts = count_branching(gen_sunlet(60))
    assert len(counts) == 61
    assert counts[1] == 120
    assert counts[60] == lucas(60) == 3461452808002


def test_branching_memo_off_on_large_sunlet():
    sunlet = gen_sunlet(30)
    assert count_branching(sunlet, memo_max_n=0) == count_branching(sunlet)


def test_branching_on_forest_with_cycle():
    # C4 on 0..3 plus the path 4-5-6
    graph = build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6)])
    assert count_branching(graph) == polynomial.multiply((1, 4, 2),
                                                         (1, 3, 1))


@pytest.mark.parametrize("n", range(3, 9))
def test_sunlet_alpha_by_oracle(n):
    sunlet = gen_sunlet(n)
    assert star_table(sunlet, Engine.ORACLE).alpha == n
    assert enumerate_independent_sets(sunlet, n)
    assert enumerate_independent_sets(sunlet, n + 1) == []


@given(SEEDS)
@settings(max_examples=50, deadline=None)
def test_branching_matches_tree_dp(seed):
    tree = random_tree(seed, high=40)
    inside, outside = count_tree_dp(tree, 0)
    assert count_branching(tree) == polynomial.add(inside, outside)


def test_compare_tables_names_entry():
    first = StarTable((1, 2, 1), ((0, 1, 0), (0, 1, 1)))
    second = StarTable((1, 2, 1), ((0, 1, 0), (0, 1, 2)))
    with pytest.raises(EngineMismatchError) as info:
        compare_tables(first, second, Engine.ORACLE, Engine.BRANCHING)
    assert "entry (1, 2)" in str(info.value)
    assert "oracle" in str(info.value)


def test_compare_tables_names_counts():
    first = StarTable((1, 2), ((0, 1), (0, 1)))
    second = StarTable((1, 3), ((0, 1), (0, 1)))
    with pytest.raises(EngineMismatchError) as info:
        compare_tables(first, second, Engine.TREEDP, Engine.ORACLE)
    assert "c_1" in str(info.value)


@pytest.mark.parametrize("name", sorted(corpus()))
def test_engines_agree_on_corpus(name):
    graph = corpus()[name]
    table = check_engines(graph)
    assert table.handshake_holds()
    assert table.counts == count_branching(graph)


@pytest.mark.parametrize("name", ["P4", "C4", "K13", "sunlet4", "T2",
                                  "two_triangles", "spider222"])
def test_counts_match_subset_brute_force(name):
    graph = corpus()[name]
    assert star_table(graph).counts == brute_counts(graph)


@given(SEEDS)
@settings(max_examples=100, deadline=None)
def test_engines_agree_on_random_trees(seed):
    tree = random_tree(seed)
    oracle = check_engines(tree)
    assert oracle.handshake_holds()
    assert star_table(tree, Engine.TREEDP) == star_table(tree,
                                                         Engine.BRANCHING)


@given(SEEDS)
@settings(max_examples=50, deadline=None)
def test_star_is_shifted_count_of_rest(seed):
    tree = random_tree(seed)
    table = star_table(tree)
    for v in tree.vertices:
        rest, _ = tree.delete_vertices(tree.closed_neighborhood(v))
        expected = polynomial.shift(count_branching(rest))
        assert polynomial.trim(table.stars[v]) == expected


@given(SEEDS)
@settings(max_examples=50, deadline=None)
def test_counts_split_on_any_vertex(seed):
    tree = random_tree(seed, high=10)
    total = count_branching(tree)
    for v in tree.vertices:
        without, _ = tree.delete_vertices({v})
        assert total == polynomial.add(
            count_branching(without),
            polynomial.trim(star_table(tree).stars[v]))
