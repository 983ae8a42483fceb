# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.

"""Test the family generators and their text specs

"""
import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers, sampled_from
from hkstars.exceptions import (BadAttachmentLengthError, FamilySpecError,
                                LengthMismatchError, MissingSeedError,
                                NotASpiderError, TooSmallError)
from hkstars.families import (FamilyKind, FamilySpec, RANDOM_MODELS,
                              all_caterpillar_specs, all_spider_specs,
                              build_family, gen_caterpillar,
                              gen_generalized_sunlet, gen_lobster, gen_path,
                              gen_random_family, gen_spider, gen_sunlet,
                              gen_tm, parse_family_spec, random_params,
                              random_specs, resolve)
from hkstars.graph import (is_caterpillar, is_connected, is_lobster,
                           is_spider, is_tree, leaves)

# pragma pylint: disable=missing-docstring

SEEDS = integers(min_value=0, max_value=10 ** 6)


def test_path():
    assert gen_path(2).edges == ((0, 1),)
    with pytest.raises(TooSmallError):
        gen_path(1)


def test_spider_labeling():
    spider = gen_spider([2, 1, 3])
    assert spider.n == 7
    assert spider.neighbors(0) == (1, 3, 4)
    assert spider.edges == ((0, 1), (0, 3), (0, 4), (1, 2), (4, 5), (5, 6))


def test_spider_errors():
    with pytest.raises(NotASpiderError):
        gen_spider([2, 2])
    with pytest.raises(TooSmallError):
        gen_spider([1, 0, 1])


def test_caterpillar_labeling():
    cat = gen_caterpillar(4, [2, 0, 1, 3])
    assert cat.n == 10
    assert cat.neighbors(0) == (1, 4, 5)
    assert cat.neighbors(2) == (1, 3, 6)
    assert leaves(cat) == {4, 5, 6, 7, 8, 9}


def test_caterpillar_errors():
    with pytest.raises(LengthMismatchError):
        gen_caterpillar(3, [1, 1])
    with pytest.raises(TooSmallError):
        gen_caterpillar(0, [])
    with pytest.raises(TooSmallError):
        gen_caterpillar(1, [0])


def test_lobster_labeling():
    lobster = gen_lobster(2, [[2], [1, 2]])
    assert lobster.edges == ((0, 1), (0, 2), (1, 4), (1, 5), (2, 3),
                             (5, 6))


def test_lobster_errors():
    with pytest.raises(BadAttachmentLengthError):
        gen_lobster(2, [[3], []])
    with pytest.raises(LengthMismatchError):
        gen_lobster(2, [[1]])


def test_tm_shape():
    for m in range(1, 6):
        tm = gen_tm(m)
        assert tm.n == 4 * m + 3
        assert leaves(tm) == set(range(3 + 2 * m, 4 * m + 3))
        assert tm.neighbors(0) == (1, 2)
        assert tm.degree(1) == tm.degree(2) == m + 1
        assert is_lobster(tm)
    with pytest.raises(TooSmallError):
        gen_tm(0)


def test_tm_middle_vertices():
    tm = gen_tm(3)
    assert tm.neighbors(1) == (0, 3, 4, 5)
    assert tm.neighbors(3) == (1, 9)
    assert tm.neighbors(8) == (2, 14)


def test_sunlet():
    sunlet = gen_sunlet(5)
    assert sunlet.n == 10
    for i in range(5):
        assert sunlet.has_edge(i, 5 + i)
        assert sunlet.has_edge(i, (i + 1) % 5)
    assert gen_sunlet(4) == gen_generalized_sunlet(4, [1, 1, 1, 1])
    with pytest.raises(TooSmallError):
        gen_sunlet(2)


def test_generalized_sunlet():
    graph = gen_generalized_sunlet(3, [1, 2, 3])
    assert graph.n == 9
    assert leaves(graph) == {3, 5, 8}
    with pytest.raises(LengthMismatchError):
        gen_generalized_sunlet(3, [1, 1])


@pytest.mark.parametrize("text", [
    "path:5", "spider:2,2,2", "caterpillar:4:2,0,1,3", "lobster:3:1,2//2,2",
    "sunlet:5", "gsunlet:3:1,2,3", "tm:3", "tree:9@4", "random-lobster@7",
    "random-spider@0",
])
def test_spec_text_is_stable(text):
    spec = parse_family_spec(text)
    assert spec.to_text() == text
    assert parse_family_spec(str(spec)) == spec


def test_spec_seed_argument():
    spec = parse_family_spec("random-caterpillar", seed=3)
    assert spec == FamilySpec(FamilyKind.CATERPILLAR, (), 3)
    assert parse_family_spec("random-caterpillar@5", seed=3).seed == 5


@pytest.mark.parametrize("text", [
    "hexagon:4", "path", "path:1,2", "caterpillar:3", "tm:x", "path:3@x",
    "random-path:3", "caterpillar:1,2:1", "path:3@\u00b2", "tm:\u00b2",
])
def test_bad_spec_text(text):
    with pytest.raises(FamilySpecError):
        parse_family_spec(text)


def test_bad_spec_is_value_error():
    with pytest.raises(ValueError):
        parse_family_spec("lobster:2:x")


def test_build_family_matches_generators():
    assert build_family(parse_family_spec("tm:3")) == gen_tm(3)
    assert build_family(parse_family_spec("caterpillar:4:2,0,1,3")) == \
        gen_caterpillar(4, [2, 0, 1, 3])
    assert build_family(parse_family_spec("lobster:3:1,2//2,2")) == \
        gen_lobster(3, [[1, 2], [], [2, 2]])
    assert build_family(parse_family_spec("gsunlet:3:1,2,3")) == \
        gen_generalized_sunlet(3, [1, 2, 3])


def test_random_needs_seed():
    with pytest.raises(MissingSeedError):
        build_family(FamilySpec(FamilyKind.LOBSTER))
    with pytest.raises(MissingSeedError):
        build_family(parse_family_spec("tree:5"))


@given(sampled_from(list(FamilyKind)), SEEDS)
@settings(max_examples=200)
def test_random_members_are_reproducible(kind, seed):
    spec = FamilySpec(kind, (), seed)
    first = gen_random_family(spec)
    assert first == gen_random_family(spec)
    assert random_params(kind, seed) == random_params(kind, seed)
    if kind is not FamilyKind.TREE:
        assert build_family(resolve(spec)) == first


@given(SEEDS)
def test_random_caterpillars(seed):
    graph = build_family(FamilySpec(FamilyKind.CATERPILLAR, (), seed))
    assert is_caterpillar(graph)
    assert graph.n <= 18


@given(SEEDS)
def test_random_lobsters(seed):
    graph = build_family(FamilySpec(FamilyKind.LOBSTER, (), seed))
    assert is_lobster(graph)
    assert graph.n <= 20


@given(SEEDS)
def test_random_spiders(seed):
    graph = build_family(FamilySpec(FamilyKind.SPIDER, (), seed))
    assert is_spider(graph)


@given(SEEDS)
def test_random_generalized_sunlets(seed):
    graph = build_family(FamilySpec(FamilyKind.GENERALIZED_SUNLET, (), seed))
    assert is_connected(graph)
    assert graph.n <= 18
    assert len(graph.edges) == graph.n


@given(SEEDS)
def test_random_trees(seed):
    spec = FamilySpec(FamilyKind.TREE, (), seed)
    graph = build_family(spec)
    low, high = RANDOM_MODELS[FamilyKind.TREE]["n"]
    assert is_tree(graph)
    assert low <= graph.n <= high
    assert resolve(spec) == spec


def test_all_caterpillar_specs():
    specs = all_caterpillar_specs(5, 2)
    assert len(specs) == 3 + 9 + 27 + 81 + 243 - 1
    assert all(is_caterpillar(build_family(spec)) for spec in specs)


def test_all_spider_specs():
    specs = all_spider_specs(5, 3)
    assert len(specs) == 10 + 15 + 21
    assert len(set(specs)) == len(specs)
    for spec in specs:
        assert list(spec.params) == sorted(spec.params, reverse=True)
        assert is_spider(build_family(spec))


def test_random_specs():
    specs = random_specs(FamilyKind.SUNLET, range(3))
    assert [spec.seed for spec in specs] == [0, 1, 2]
    assert all(not spec.params for spec in specs)
