# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.

"""Immutable simple graphs and the structural predicates used on trees

Vertices are the dense integers ``0..n-1``. A :py:class:`Graph` never changes
after construction; operations that remove vertices build a new graph and
return a table mapping old ids to new ids.

Caterpillars and lobsters are recognized by stripping leaves. When a
stripping leaves nothing or a single vertex, that residue counts as a
(possibly empty) path, so every tree small enough to have no real spine is
both a caterpillar and a lobster.

"""

import logging
from enum import Enum
from typing import (AbstractSet, Dict, FrozenSet, Iterable, List, NamedTuple,
                    Optional, Sequence, Tuple)
from hkstars.exceptions import (SelfLoopError, DuplicateEdgeError,
                                VertexOutOfRangeError, NotATreeError,
                                NotLobsterError)

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class VertexRole(Enum):
    """Role of a vertex relative to the lobster decomposition of its tree

    """
    LEAF = "Leaf"
    SPINAL_DEG2 = "SpinalDeg2"
    SPINAL_OTHER = "SpinalOther"
    INTERNAL = "Internal"

    def __str__(self) -> str:
        return self.value


class Graph:
    """An immutable simple undirected graph on vertices ``0..n-1``

    >>> g = Graph(3, [(1, 0), (1, 2)])
    >>> g.edges
    ((0, 1), (1, 2))
    >>> g.neighbors(1)
    (0, 2)
    >>> g.degree(0)
    1

    Attributes:
        n: Number of vertices
        edges: Every edge once, as ``(u, v)`` with ``u < v``, sorted
    """

    __slots__ = ("_n", "_edges", "_adjacency")

    def __init__(self, n: int, edge_list: Iterable[Edge]) -> None:
        """Validate ``edge_list`` and build the adjacency lists

        Args:
            n: Number of vertices
            edge_list: Unordered pairs of distinct vertices

        Raises:
            VertexOutOfRangeError: An endpoint is not in ``0..n-1``
            SelfLoopError: A pair has equal endpoints
            DuplicateEdgeError: The same unordered pair appears twice
        """
        if n < 0:
            raise ValueError("Vertex count must be non-negative, got "
                             "{}".format(n))
        seen = set()  # type: set
        neighbors = [[] for _ in range(n)]  # type: List[List[int]]
        for pair in edge_list:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError.from_pair((u, v), n)
            if u == v:
                raise SelfLoopError.from_pair((u, v))
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdgeError.from_pair((u, v))
            seen.add(key)
            neighbors[u].append(v)
            neighbors[v].append(u)
        self._n = n
        self._edges = tuple(sorted(seen))
        self._adjacency = tuple(tuple(sorted(adj)) for adj in neighbors)

    @property
    def n(self) -> int:
        # pylint: disable=missing-docstring,invalid-name
        return self._n

    @property
    def edges(self) -> Tuple[Edge, ...]:
        # pylint: disable=missing-docstring
        return self._edges

    @property
    def vertices(self) -> range:
        """All vertex ids, ``range(n)``

        """
        return range(self._n)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Sorted neighbors of ``v``

        """
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        """Number of neighbors of ``v``

        """
        return len(self._adjacency[v])

    def degrees(self) -> Tuple[int, ...]:
        """Degree of every vertex, indexed by vertex

        """
        return tuple(len(adj) for adj in self._adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        """Check whether ``u`` and ``v`` are adjacent

        """
        return v in self._adjacency[u]

    def closed_neighborhood(self, v: int) -> FrozenSet[int]:
        """``v`` together with all its neighbors

        """
        return frozenset(self._adjacency[v]) | {v}

    def is_independent(self, vertices: Iterable[int]) -> bool:
        """Check that no two of ``vertices`` are adjacent

        >>> Graph(3, [(0, 1), (1, 2)]).is_independent({0, 2})
        True
        >>> Graph(3, [(0, 1), (1, 2)]).is_independent({0, 1})
        False

        """
        chosen = frozenset(vertices)
        return all(not chosen.intersection(self._adjacency[v])
                   for v in chosen)

    def induced_subgraph(self, keep: Iterable[int]) \
            -> Tuple["Graph", Dict[int, int]]:
        """Build the subgraph induced by ``keep``

        Kept vertices are renumbered densely in increasing order of their
        old ids.

        >>> sub, remap = Graph(4, [(0, 1), (1, 2), (2, 3)]).induced_subgraph(
        ...     [1, 2, 3])
        >>> sub.edges, remap
        (((0, 1), (1, 2)), {1: 0, 2: 1, 3: 2})

        Args:
            keep: Vertices of the subgraph

        Returns: The subgraph and a map from old to new vertex ids

        """
        kept = sorted(set(keep))
        remap = {old: new for new, old in enumerate(kept)}
        sub_edges = [(remap[u], remap[v]) for u, v in self._edges
                     if u in remap and v in remap]
        return Graph(len(kept), sub_edges), remap

    def delete_vertices(self, removed: Iterable[int]) \
            -> Tuple["Graph", Dict[int, int]]:
        """Build ``G - W``, the graph without the vertices in ``removed``

        Args:
            removed: The vertices ``W`` to delete

        Returns: The smaller graph and a map from old to new vertex ids
            (deleted vertices are absent from the map)

        """
        gone = frozenset(removed)
        return self.induced_subgraph(v for v in self.vertices
                                     if v not in gone)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return "Graph(n={}, edges={})".format(self._n, list(self._edges))


def build_graph(n: int, edge_list: Iterable[Edge]) -> Graph:
    """Create a validated :py:class:`Graph`

    >>> build_graph(2, [(0, 1)]).degrees()
    (1, 1)

    Args:
        n: Number of vertices
        edge_list: Unordered pairs of distinct vertices in ``0..n-1``

    Returns: The graph

    Raises:
        SelfLoopError, DuplicateEdgeError, VertexOutOfRangeError: See
            :py:class:`Graph`

    """
    return Graph(n, edge_list)


def is_connected(graph: Graph) -> bool:
    """Check whether every vertex is reachable from vertex ``0``

    The graph with no vertices counts as connected.

    """
    if graph.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for w in graph.neighbors(stack.pop()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == graph.n


def is_tree(graph: Graph) -> bool:
    """Check whether ``graph`` is a tree

    Trees must have at least two vertices.

    >>> is_tree(build_graph(4, [(0, 1), (1, 2), (2, 3)]))
    True
    >>> is_tree(build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    False
    >>> is_tree(build_graph(1, []))
    False

    """
    return graph.n >= 2 and len(graph.edges) == graph.n - 1 and \
        is_connected(graph)


def leaves(graph: Graph) -> FrozenSet[int]:
    """Vertices of degree exactly one

    >>> sorted(leaves(build_graph(4, [(0, 1), (1, 2), (2, 3)])))
    [0, 3]

    """
    return frozenset(v for v in graph.vertices if graph.degree(v) == 1)


def _strip_leaves(graph: Graph, within: AbstractSet[int]) -> FrozenSet[int]:
    """Remove the vertices of degree one in the subgraph induced by ``within``

    """
    return frozenset(
        v for v in within
        if sum(1 for w in graph.neighbors(v) if w in within) != 1)


def _order_path(graph: Graph, within: AbstractSet[int]) \
        -> Optional[Tuple[int, ...]]:
    """Order the vertices of ``within`` along a path, if they induce one

    Paths are read from the endpoint with the smaller id.

    Returns: The vertices in path order, or ``None`` if the induced subgraph
        is not a path. The empty set and single vertices are paths.

    """
    if len(within) <= 1:
        return tuple(within)
    inner_deg = {v: sum(1 for w in graph.neighbors(v) if w in within)
                 for v in within}
    if any(d > 2 or d == 0 for d in inner_deg.values()):
        return None
    ends = sorted(v for v, d in inner_deg.items() if d == 1)
    if len(ends) != 2:
        return None
    order = [ends[0]]
    prev = -1
    while len(order) < len(within):
        nxt = [w for w in graph.neighbors(order[-1])
               if w in within and w != prev]
        if not nxt:
            return None
        prev = order[-1]
        order.append(nxt[0])
    if order[-1] != ends[1]:
        return None
    return tuple(order)


def caterpillar_spine(graph: Graph) -> Optional[Tuple[int, ...]]:
    """Spine of a caterpillar: the path left after removing the leaves

    >>> caterpillar_spine(build_graph(5, [(0, 1), (1, 2), (2, 3), (1, 4)]))
    (1, 2)

    Args:
        graph: A tree

    Returns: The spine in path order, or ``None`` if ``graph`` is not a
        caterpillar

    Raises:
        NotATreeError: If ``graph`` is not a tree

    """
    if not is_tree(graph):
        raise NotATreeError("{} is not a tree".format(graph))
    return _order_path(graph, _strip_leaves(graph, frozenset(graph.vertices)))


def is_caterpillar(graph: Graph) -> bool:
    """Check whether ``graph`` is a tree whose leaf removal leaves a path

    """
    return is_tree(graph) and caterpillar_spine(graph) is not None


class LobsterDecomposition(NamedTuple):
    """Result of stripping the leaves of a lobster twice

    Attributes:
        spine: Spinal vertices in path order
        caterpillar_vertices: Vertices left after the first stripping
        roles: :py:class:`VertexRole` of every vertex, indexed by vertex
    """
    spine: Tuple[int, ...]
    caterpillar_vertices: FrozenSet[int]
    roles: Tuple[VertexRole, ...]

    def spinal_deg2(self) -> FrozenSet[int]:
        """Spinal vertices of degree two

        """
        return frozenset(v for v, role in enumerate(self.roles)
                         if role is VertexRole.SPINAL_DEG2)


def decompose_lobster(graph: Graph) -> LobsterDecomposition:
    """Find the caterpillar and spine of a lobster and classify its vertices

    >>> dec = decompose_lobster(build_graph(
    ...     5, [(0, 1), (1, 2), (2, 3), (3, 4)]))
    >>> dec.spine
    (2,)
    >>> [str(role) for role in dec.roles]
    ['Leaf', 'Internal', 'SpinalDeg2', 'Internal', 'Leaf']

    Args:
        graph: A tree

    Returns: The decomposition

    Raises:
        NotATreeError: If ``graph`` is not a tree
        NotLobsterError: If the residue of two strippings is not a path

    """
    if not is_tree(graph):
        raise NotATreeError("{} is not a tree".format(graph))
    caterpillar = _strip_leaves(graph, frozenset(graph.vertices))
    spine = _order_path(graph, _strip_leaves(graph, caterpillar))
    if spine is None:
        raise NotLobsterError(
            "Stripping leaves twice from {} does not leave a path".format(
                graph))
    logger.debug("Lobster with %d caterpillar vertices, spine %s",
                 len(caterpillar), spine)
    return LobsterDecomposition(spine, caterpillar,
                                _classify(graph, frozenset(spine)))


def is_lobster(graph: Graph) -> bool:
    """Check whether ``graph`` is a tree that :py:func:`decompose_lobster`
    accepts

    """
    if not is_tree(graph):
        return False
    try:
        decompose_lobster(graph)
    except NotLobsterError:
        return False
    return True


def _classify(graph: Graph, spine: AbstractSet[int]) \
        -> Tuple[VertexRole, ...]:
    roles = []
    for v in graph.vertices:
        if graph.degree(v) == 1:
            roles.append(VertexRole.LEAF)
        elif v in spine:
            roles.append(VertexRole.SPINAL_DEG2 if graph.degree(v) == 2
                         else VertexRole.SPINAL_OTHER)
        else:
            roles.append(VertexRole.INTERNAL)
    return tuple(roles)


def vertex_roles(graph: Graph) -> Tuple[VertexRole, ...]:
    """Role of every vertex, for any graph

    Lobsters get the roles of :py:func:`decompose_lobster`. Other graphs
    have no spine, so their vertices are only leaves or internal.

    """
    if is_lobster(graph):
        return decompose_lobster(graph).roles
    return _classify(graph, frozenset())


def roles_of(roles: Sequence[VertexRole], vertices: Iterable[int]) \
        -> Tuple[VertexRole, ...]:
    """Roles of ``vertices`` in increasing vertex order

    """
    return tuple(roles[v] for v in sorted(vertices))


def is_spider(graph: Graph) -> bool:
    """Check whether ``graph`` is a tree with exactly one vertex of degree
    greater than 2

    >>> is_spider(build_graph(4, [(0, 1), (0, 2), (0, 3)]))
    True

    """
    return is_tree(graph) and \
        sum(1 for d in graph.degrees() if d > 2) == 1
