# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.

"""Exact sizes of independent-set families and their stars

The star of ``v`` at size ``k`` is the family of independent ``k``-sets that
contain ``v``. Three interchangeable engines compute star sizes:

* :py:attr:`Engine.ORACLE` enumerates every independent set. It is slow and
  obviously correct, so every other engine is checked against it.
* :py:attr:`Engine.TREEDP` runs the independence-polynomial recurrence on a
  tree rooted at each vertex in turn.
* :py:attr:`Engine.BRANCHING` uses ``c(G) = c(G - v) + x c(G - N[v])`` and
  reads the star of ``v`` off ``x c(G - N[v])``. It works on any graph.

All counts are Python integers and therefore exact.

"""

import logging
from enum import Enum
from typing import (Callable, Dict, Iterable, Iterator, List, NamedTuple,
                    Optional, Sequence, Tuple)
from hkstars import polynomial
from hkstars.exceptions import (EngineMismatchError, EngineNotApplicableError,
                                NotATreeError)
from hkstars.graph import Graph, is_tree
from hkstars.polynomial import CountVector

logger = logging.getLogger(__name__)

# Auto engine also runs the oracle and compares when n is at most this
ORACLE_CROSS_CHECK_MAX_N = 10
# Branching engine memoizes on the remaining vertex set only up to this n
MEMO_MAX_N = 64

VertexSet = Tuple[int, ...]


class Engine(Enum):
    """Star counting engines

    """
    ORACLE = "oracle"
    TREEDP = "treedp"
    BRANCHING = "branching"
    AUTO = "auto"


def _independent_sets(graph: Graph, k_max: int) -> Iterator[VertexSet]:
    """Yield every independent set of size at most ``k_max``

    Sets are sorted tuples. Sets of equal size come out in lexicographic
    order, and each set comes before its extensions.

    """
    chosen = []  # type: List[int]

    def extend(start: int, blocked: frozenset) -> Iterator[VertexSet]:
        yield tuple(chosen)
        if len(chosen) == k_max:
            return
        for v in range(start, graph.n):
            if v in blocked:
                continue
            chosen.append(v)
            yield from extend(v + 1, blocked | graph.closed_neighborhood(v))
            chosen.pop()

    yield from extend(0, frozenset())


def enumerate_independent_sets(graph: Graph, k: int) -> List[VertexSet]:
    """All independent ``k``-sets of ``graph`` in lexicographic order

    >>> from hkstars.families import gen_path
    >>> enumerate_independent_sets(gen_path(4), 2)
    [(0, 2), (0, 3), (1, 3)]
    >>> enumerate_independent_sets(gen_path(4), 0)
    [()]

    Args:
        graph: The graph
        k: Set size, ``0 <= k``

    Returns: Every independent set of size ``k`` as a sorted tuple

    """
    return sorted(s for s in _independent_sets(graph, k) if len(s) == k)


def star_size_oracle(graph: Graph, v: int, k: int) -> int:
    """Size of the star of ``v`` at size ``k``, by enumeration

    >>> from hkstars.families import gen_path
    >>> star_size_oracle(gen_path(4), 0, 2), star_size_oracle(gen_path(4), 1, 2)
    (2, 1)

    """
    return sum(1 for s in enumerate_independent_sets(graph, k) if v in s)


def count_tree_dp(tree: Graph, root: int, k_max: Optional[int] = None) \
        -> Tuple[CountVector, CountVector]:
    """Count independent sets of a tree split by whether they contain ``root``

    For a vertex ``u`` with children ``c``::

        in(u)  = x * prod_c out(c)
        out(u) = prod_c (in(c) + out(c))

    >>> from hkstars.families import gen_path
    >>> count_tree_dp(gen_path(3), 1)
    ((0, 1), (1, 2, 1))

    Args:
        tree: A tree
        root: The vertex to root ``tree`` at
        k_max: Largest set size to keep, or ``None`` for all

    Returns: ``(in_vector, out_vector)``, the trimmed count vectors of the
        independent sets that contain and that avoid ``root``

    Raises:
        NotATreeError: If ``tree`` is not a tree

    """
    if not is_tree(tree):
        raise NotATreeError("Tree DP needs a tree, got {}".format(tree))
    return _rooted_dp(root, tree.neighbors, k_max)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1


def _rooted_dp(root: int, neighbors: Callable[[int], Iterable[int]],
               k_max: Optional[int]) -> Tuple[CountVector, CountVector]:
    """Run the tree recurrence from ``root`` over the tree that
    ``neighbors`` describes

    """
    parent = {root: -1}
    order = [root]
    for u in order:
        for w in neighbors(u):
            if w not in parent:
                parent[w] = u
                order.append(w)
    inside = {}  # type: Dict[int, CountVector]
    outside = {}  # type: Dict[int, CountVector]
    for u in reversed(order):
        children = [w for w in neighbors(u) if parent[u] != w]
        inside[u] = polynomial.shift(
            polynomial.product((outside[c] for c in children), k_max), k_max)
        outside[u] = polynomial.product(
            (polynomial.add(inside[c], outside[c]) for c in children), k_max)
    return inside[root], outside[root]


class _Brancher:
    """Branching recursion on bitmasks of remaining vertices

    """

    def __init__(self, graph: Graph, k_max: Optional[int],
                 memoize: bool) -> None:
        self.k_max = k_max
        self.adj = [sum(1 << w for w in graph.neighbors(v))
                    for v in graph.vertices]
        self.closed = [self.adj[v] | (1 << v) for v in graph.vertices]
        self.memo = {} if memoize else None  # type: Optional[Dict]

    def component(self, mask: int) -> int:
        """Connected component of the lowest vertex in ``mask``

        """
        comp = mask & -mask
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = self.adj[low.bit_length() - 1] & mask & ~comp
            comp |= new
            frontier |= new
        return comp

    def is_tree(self, comp: int) -> bool:
        """Check whether the connected vertex set ``comp`` induces a tree

        """
        degrees = sum(bin(self.adj[v] & comp).count("1") for v in _bits(comp))
        return degrees == 2 * (bin(comp).count("1") - 1)

    def count_tree(self, comp: int) -> CountVector:
        """Count vector of the tree induced by ``comp``, by tree DP

        """
        inside, outside = _rooted_dp(
            (comp & -comp).bit_length() - 1,
            lambda u: _bits(self.adj[u] & comp), self.k_max)
        return polynomial.add(inside, outside)

    def count(self, mask: int) -> CountVector:
        """Count vector of the subgraph induced by ``mask``

        Tree components skip branching and go straight to tree DP.

        """
        if mask == 0:
            return polynomial.ONE
        if self.memo is not None and mask in self.memo:
            return self.memo[mask]
        comp = self.component(mask)
        if comp != mask:
            result = polynomial.multiply(self.count(comp),
                                         self.count(mask & ~comp),
                                         self.k_max)
        elif self.is_tree(mask):
            result = self.count_tree(mask)
        else:
            pivot, best = -1, -1
            for v in _bits(mask):
                deg = bin(self.adj[v] & mask).count("1")
                if deg > best:
                    pivot, best = v, deg
            result = polynomial.add(
                self.count(mask & ~(1 << pivot)),
                polynomial.shift(self.count(mask & ~self.closed[pivot]),
                                 self.k_max))
        if self.memo is not None:
            self.memo[mask] = result
        return result


def count_branching(graph: Graph, k_max: Optional[int] = None,
                    memo_max_n: int = MEMO_MAX_N) -> CountVector:
    """Count vector of ``graph`` by the deletion recurrence

    The pivot is a vertex of highest degree (smallest id on ties).
    Disconnected residues are split into components first, and components
    that are trees are counted by tree DP instead of branching.

    >>> from hkstars.graph import build_graph
    >>> count_branching(build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    (1, 4, 2)
    >>> count_branching(build_graph(3, []))
    (1, 3, 3, 1)

    Args:
        graph: Any graph
        k_max: Largest set size to keep, or ``None`` for all
        memo_max_n: Memoize on the remaining vertex set only when
            ``graph.n`` is at most this

    Returns: The trimmed count vector of ``graph``

    """
    brancher = _Brancher(graph, k_max, graph.n <= memo_max_n)
    result = brancher.count((1 << graph.n) - 1)
    if brancher.memo is not None:
        logger.debug("Branching on n=%d used %d memo entries", graph.n,
                     len(brancher.memo))
    return result


class StarTable(NamedTuple):
    """Whole-graph counts and the star sizes of every vertex

    Attributes:
        counts: ``counts[k]`` is the number of independent ``k``-sets, for
            ``k = 0..alpha`` (or up to the ``k_max`` the table was built
            with)
        stars: ``stars[v][k]`` is the size of the star of ``v`` at size
            ``k``; every vector has the same length as ``counts``
    """
    counts: CountVector
    stars: Tuple[CountVector, ...]

    @property
    def alpha(self) -> int:
        """Largest ``k`` covered by the table (the independence number for
        untruncated tables)

        """
        return len(self.counts) - 1

    def entry(self, v: int, k: int) -> int:
        """Size of the star of ``v`` at size ``k``

        """
        return polynomial.coefficient(self.stars[v], k)

    def column(self, k: int) -> Tuple[int, ...]:
        """Star sizes of every vertex at size ``k``

        """
        return tuple(polynomial.coefficient(star, k) for star in self.stars)

    def rows(self) -> Iterator[Tuple[int, int, int]]:
        """``(vertex, k, count)`` for every vertex and ``1 <= k <= alpha``,
        sorted by vertex then ``k``

        """
        for v, star in enumerate(self.stars):
            for k in range(1, self.alpha + 1):
                yield v, k, star[k]

    def handshake_holds(self) -> bool:
        """Check that the stars at size ``k`` add up to ``k`` times the
        number of ``k``-sets, for every ``k``

        """
        return all(sum(self.column(k)) == k * self.counts[k]
                   for k in range(len(self.counts)))


def _make_table(counts: CountVector,
                stars: Sequence[CountVector]) -> StarTable:
    length = len(counts)
    return StarTable(counts, tuple(polynomial.pad(s, length) for s in stars))


def _oracle_table(graph: Graph, k_max: Optional[int]) -> StarTable:
    limit = graph.n if k_max is None else k_max
    counts = [0] * (limit + 1)
    stars = [[0] * (limit + 1) for _ in graph.vertices]
    for subset in _independent_sets(graph, limit):
        counts[len(subset)] += 1
        for v in subset:
            stars[v][len(subset)] += 1
    return _make_table(polynomial.trim(counts),
                       [tuple(s) for s in stars])


def _tree_table(graph: Graph, k_max: Optional[int]) -> StarTable:
    if not is_tree(graph):
        raise EngineNotApplicableError(
            "Engine {} needs a tree, got {}".format(Engine.TREEDP.value,
                                                    graph))
    stars = []
    counts = polynomial.ONE
    for v in graph.vertices:
        inside, outside = count_tree_dp(graph, v, k_max)
        if v == 0:
            counts = polynomial.add(inside, outside)
        stars.append(inside)
    return _make_table(counts, stars)


def _branching_table(graph: Graph, k_max: Optional[int]) -> StarTable:
    counts = count_branching(graph, k_max)
    stars = []
    for v in graph.vertices:
        rest, _ = graph.delete_vertices(graph.closed_neighborhood(v))
        stars.append(polynomial.shift(count_branching(rest, k_max), k_max))
    return _make_table(counts, stars)


_BUILDERS = {
    Engine.ORACLE: _oracle_table,
    Engine.TREEDP: _tree_table,
    Engine.BRANCHING: _branching_table,
}


def pick_engine(graph: Graph) -> Engine:
    """The engine :py:attr:`Engine.AUTO` runs for ``graph``

    """
    return Engine.TREEDP if is_tree(graph) else Engine.BRANCHING


def star_table(graph: Graph, engine: Engine = Engine.AUTO,
               k_max: Optional[int] = None,
               oracle_max_n: int = ORACLE_CROSS_CHECK_MAX_N) -> StarTable:
    """Compute the star table of ``graph``

    ``Engine.AUTO`` uses the tree engine on trees and branching otherwise,
    and additionally compares against the oracle when ``graph.n`` is at most
    ``oracle_max_n``.

    >>> from hkstars.families import gen_path
    >>> table = star_table(gen_path(4))
    >>> table.counts, table.stars[0]
    ((1, 4, 3), (0, 1, 2))

    Args:
        graph: The graph
        engine: Which engine to run
        k_max: Largest set size to compute, or ``None`` for all
        oracle_max_n: Size limit of the automatic oracle cross-check

    Returns: The star table

    Raises:
        EngineNotApplicableError: If the tree engine is asked for on a
            non-tree
        EngineMismatchError: If the cross-check finds a difference

    """
    if engine is not Engine.AUTO:
        return _BUILDERS[engine](graph, k_max)
    chosen = pick_engine(graph)
    logger.debug("Auto engine picked %s for n=%d", chosen.value, graph.n)
    table = _BUILDERS[chosen](graph, k_max)
    if graph.n <= oracle_max_n:
        compare_tables(table, _oracle_table(graph, k_max), chosen,
                       Engine.ORACLE)
    return table


def compare_tables(first: StarTable, second: StarTable, first_engine: Engine,
                   second_engine: Engine) -> None:
    """Raise on the first entry where two star tables differ

    Raises:
        EngineMismatchError: Describing the first differing entry

    """
    names = (first_engine.value, second_engine.value)
    length = max(len(first.counts), len(second.counts))
    for k in range(length):
        a_k = polynomial.coefficient(first.counts, k)
        b_k = polynomial.coefficient(second.counts, k)
        if a_k != b_k:
            logger.warning("Engine disagreement at c_%d", k)
            raise EngineMismatchError.from_diff(names[0], names[1], -1, k,
                                                a_k, b_k)
    for v, (a_star, b_star) in enumerate(zip(first.stars, second.stars)):
        for k in range(length):
            a_k = polynomial.coefficient(a_star, k)
            b_k = polynomial.coefficient(b_star, k)
            if a_k != b_k:
                logger.warning("Engine disagreement at (%d, %d)", v, k)
                raise EngineMismatchError.from_diff(names[0], names[1], v, k,
                                                    a_k, b_k)


def check_engines(graph: Graph, k_max: Optional[int] = None) -> StarTable:
    """Run every applicable engine on ``graph`` and require equal tables

    Returns: The oracle's table

    Raises:
        EngineMismatchError: If any two tables differ

    """
    reference = _oracle_table(graph, k_max)
    engines = [Engine.BRANCHING]
    if is_tree(graph):
        engines.append(Engine.TREEDP)
    for engine in engines:
        compare_tables(_BUILDERS[engine](graph, k_max), reference, engine,
                       Engine.ORACLE)
    return reference


def independence_number(graph: Graph) -> int:
    """Size of a largest independent set

    >>> from hkstars.families import gen_sunlet
    >>> independence_number(gen_sunlet(5))
    5

    """
    return len(count_branching(graph)) - 1
