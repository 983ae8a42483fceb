# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.

"""Defines constants and helpers shared by all tests

"""

import networkx as nx
from hkstars.graph import Graph, build_graph
from hkstars.families import (gen_caterpillar, gen_generalized_sunlet,
                              gen_lobster, gen_path, gen_spider, gen_sunlet,
                              gen_tm)

TEST_RES = "tests/res"
EDGE_LISTS = TEST_RES + "/edge_lists"

C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
K13 = build_graph(4, [(0, 1), (0, 2), (0, 3)])


def corpus():
    """Small graphs, each with at most 15 vertices, keyed by name

    """
    return {
        "P2": gen_path(2),
        "P4": gen_path(4),
        "P6": gen_path(6),
        "C4": C4,
        "K13": K13,
        "K14": gen_spider([1, 1, 1, 1]),
        "spider222": gen_spider([2, 2, 2]),
        "spider312": gen_spider([3, 1, 2]),
        "sunlet4": gen_sunlet(4),
        "sunlet5": gen_sunlet(5),
        "gsunlet": gen_generalized_sunlet(3, [1, 2, 1]),
        "caterpillar121": gen_caterpillar(3, [1, 2, 1]),
        "caterpillar10201": gen_caterpillar(5, [1, 0, 2, 0, 1]),
        "lobster": gen_lobster(3, [[1, 2], [], [2, 2]]),
        "T2": gen_tm(2),
        "T3": gen_tm(3),
        "two_triangles": build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4),
                                         (4, 5), (5, 3)]),
    }


def to_networkx(graph: Graph) -> nx.Graph:
    """The same graph as a :py:class:`networkx.Graph`

    """
    result = nx.Graph()
    result.add_nodes_from(graph.vertices)
    result.add_edges_from(graph.edges)
    return result
