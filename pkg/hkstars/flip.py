# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.

"""Flipping escape paths to compare stars

An *escape path* from ``v1`` to ``vn`` is a path ``v1, v2, ..., vn`` in a
graph where ``vn`` is pendant and ``v2 .. v(n-2)`` all have degree 2. The
penultimate vertex ``v(n-1)`` and the start ``v1`` may have any degree.

Reversing such a path and fixing every other vertex maps each independent
set containing ``v1`` to a distinct independent set containing ``vn``, so
the star at ``v1`` is never larger than the star at the pendant ``vn``. The
functions here carry out that map on concrete sets and check the claim by
enumeration.

"""

import logging
from typing import (AbstractSet, FrozenSet, Iterable, List, NamedTuple,
                    Sequence, Tuple)
from hkstars.exceptions import (CounterexampleFoundError, GraphError,
                                HypothesisViolationError)
from hkstars.graph import Graph
from hkstars.star_count import enumerate_independent_sets

logger = logging.getLogger(__name__)


class EscapePath(NamedTuple):
    """A vertex sequence satisfying the escape-path conditions

    Build with :py:meth:`EscapePath.checked` to validate against a graph.

    Attributes:
        vertices: ``v1 .. vn`` in order, ``n >= 2``
    """
    vertices: Tuple[int, ...]

    @property
    def start(self) -> int:
        """``v1``, the vertex whose star is bounded

        """
        return self.vertices[0]

    @property
    def end(self) -> int:
        """``vn``, the pendant vertex

        """
        return self.vertices[-1]

    @property
    def size(self) -> int:
        """Number of vertices ``n``

        """
        return len(self.vertices)

    @classmethod
    def checked(cls, graph: Graph, vertices: Sequence[int]) -> "EscapePath":
        """Create an escape path after checking it against ``graph``

        Raises:
            GraphError: If ``vertices`` is not an escape path in ``graph``

        """
        if not is_escape_path(graph, vertices):
            raise GraphError("{} is not an escape path in {}".format(
                list(vertices), graph))
        return cls(tuple(vertices))


def is_escape_path(graph: Graph, vertices: Sequence[int]) -> bool:
    """Check the escape-path conditions directly

    >>> from hkstars.families import gen_path
    >>> is_escape_path(gen_path(5), [2, 3, 4])
    True
    >>> is_escape_path(gen_path(5), [2, 3])
    False

    Args:
        graph: The graph
        vertices: Candidate ``v1 .. vn``

    Returns: ``True`` iff the sequence is a path of distinct, consecutively
        adjacent vertices of ``graph`` with ``deg(vn) = 1`` and
        ``deg(vi) = 2`` for ``2 <= i <= n - 2``

    """
    count = len(vertices)
    if count < 2 or len(set(vertices)) != count:
        return False
    if not all(0 <= v < graph.n for v in vertices):
        return False
    if not all(graph.has_edge(a, b) for a, b in zip(vertices, vertices[1:])):
        return False
    if graph.degree(vertices[-1]) != 1:
        return False
    return all(graph.degree(v) == 2 for v in vertices[1:count - 2])


def _sort_paths(paths: Iterable[Tuple[int, ...]]) -> List[EscapePath]:
    return [EscapePath(p) for p in
            sorted(paths, key=lambda p: (len(p), p[-1], p))]


def find_escape_paths(graph: Graph, v: int) -> List[EscapePath]:
    """Find every escape path that starts at ``v``

    From each neighbor, walk along vertices of degree 2. Every vertex ``y``
    reached this way (including the first neighbor) can be the penultimate
    vertex, and each pendant neighbor of ``y`` off the walk ends a path. A
    pendant neighbor of ``v`` itself gives a path of one edge.

    Paths are ordered by number of vertices, then end vertex, then vertex
    sequence.

    >>> from hkstars.families import gen_path
    >>> [p.vertices for p in find_escape_paths(gen_path(5), 2)]
    [(2, 1, 0), (2, 3, 4)]

    Args:
        graph: The graph
        v: Start vertex

    Returns: All escape paths from ``v``; empty iff there are none

    """
    found = []  # type: List[Tuple[int, ...]]
    for w in graph.neighbors(v):
        if graph.degree(w) == 1:
            found.append((v, w))
    for w in graph.neighbors(v):
        prefix = [v]
        y = w
        while y not in prefix:
            for leaf in graph.neighbors(y):
                if graph.degree(leaf) == 1 and leaf not in prefix:
                    found.append(tuple(prefix) + (y, leaf))
            if graph.degree(y) != 2:
                break
            nxt = [u for u in graph.neighbors(y) if u != prefix[-1]]
            prefix.append(y)
            y = nxt[0]
    return _sort_paths(found)


def escape_paths_brute_force(graph: Graph, v: int) -> List[EscapePath]:
    """Find every escape path from ``v`` by testing all simple paths

    Exponential; meant for cross-checking :py:func:`find_escape_paths` on
    small graphs.

    """
    found = []  # type: List[Tuple[int, ...]]
    path = [v]

    def walk() -> None:
        if len(path) >= 2 and is_escape_path(graph, path):
            found.append(tuple(path))
        for w in graph.neighbors(path[-1]):
            if w not in path:
                path.append(w)
                walk()
                path.pop()

    walk()
    return _sort_paths(found)


def flip_on_path(path: Graph, vertices: Iterable[int]) -> FrozenSet[int]:
    """Reverse a set of vertices of the path ``0 - 1 - ... - n-1``

    Vertex ``i`` goes to ``n - 1 - i``.

    >>> from hkstars.families import gen_path
    >>> sorted(flip_on_path(gen_path(5), {0, 2}))
    [2, 4]

    Args:
        path: A path graph labelled in path order
        vertices: Subset of the path's vertices

    Returns: The reversed set

    Raises:
        GraphError: If ``path`` is not labelled in path order or a vertex is
            not on it

    """
    if path.edges != tuple((i, i + 1) for i in range(path.n - 1)):
        raise GraphError("{} is not a path labelled in order".format(path))
    chosen = frozenset(vertices)
    if any(not 0 <= v < path.n for v in chosen):
        raise GraphError("{} is not a subset of 0..{}".format(
            sorted(chosen), path.n - 1))
    return frozenset(path.n - 1 - v for v in chosen)


def flip_p_unchecked(path: EscapePath,
                     vertices: Iterable[int]) -> FrozenSet[int]:
    """Apply the flip of ``path`` to any vertex set

    Path vertex ``v_i`` goes to ``v_(n+1-i)``; all other vertices stay. This
    is an involution on sets but does not preserve independence unless the
    set contains ``v1``.

    >>> sorted(flip_p_unchecked(EscapePath((5, 1, 7)), {5, 9}))
    [7, 9]

    """
    mirror = dict(zip(path.vertices, reversed(path.vertices)))
    return frozenset(mirror.get(v, v) for v in vertices)


def flip_p(graph: Graph, path: EscapePath,
           vertices: AbstractSet[int]) -> FrozenSet[int]:
    """Flip ``path`` on an independent set that contains its start

    The result is independent, contains ``path.end``, and has the size of
    ``vertices``.

    Args:
        graph: The graph ``path`` lives in
        path: An escape path of ``graph``
        vertices: An independent set containing ``path.start``

    Returns: The flipped set

    Raises:
        GraphError: If ``path`` is not an escape path of ``graph``
        HypothesisViolationError: If ``vertices`` is not independent or
            misses ``path.start``

    """
    if not is_escape_path(graph, path.vertices):
        raise GraphError("{} is not an escape path in {}".format(
            list(path.vertices), graph))
    if path.start not in vertices:
        raise HypothesisViolationError(
            "Flip needs a set containing v1 = {}, got {}".format(
                path.start, sorted(vertices)))
    if not graph.is_independent(vertices):
        raise HypothesisViolationError("Flip needs an independent set, got "
                                       "{}".format(sorted(vertices)))
    return flip_p_unchecked(path, vertices)


class InjectionReport(NamedTuple):
    """Outcome of checking the flip of one escape path at one size

    Attributes:
        path: The escape path that was flipped
        k: Set size
        source_count: Size of the star at ``path.start``
        target_count: Size of the star at ``path.end``
    """
    path: EscapePath
    k: int
    source_count: int
    target_count: int

    @property
    def bounded(self) -> bool:
        """Whether the star at the start is no larger than at the end

        """
        return self.source_count <= self.target_count

    def to_dict(self) -> dict:
        """JSON-ready form; counts are decimal strings

        """
        return {"path": list(self.path.vertices), "k": self.k,
                "source_count": str(self.source_count),
                "target_count": str(self.target_count),
                "bounded": self.bounded}


def verify_injection(graph: Graph, path: EscapePath, k: int) \
        -> InjectionReport:
    """Check by enumeration that the flip of ``path`` injects the star of
    ``path.start`` into the star of ``path.end`` at size ``k``

    Args:
        graph: The graph
        path: An escape path of ``graph``
        k: Set size

    Returns: The report with both star sizes

    Raises:
        GraphError: If ``path`` is not an escape path of ``graph``
        CounterexampleFoundError: If some image is not in the target star or
            two images coincide

    """
    if not is_escape_path(graph, path.vertices):
        raise GraphError("{} is not an escape path in {}".format(
            list(path.vertices), graph))
    all_sets = enumerate_independent_sets(graph, k)
    source = [frozenset(s) for s in all_sets if path.start in s]
    target_count = sum(1 for s in all_sets if path.end in s)
    images = set()
    for subset in source:
        image = flip_p_unchecked(path, subset)
        if path.end not in image:
            raise CounterexampleFoundError.from_witness(
                "image misses the pendant end {}".format(path.end), subset)
        if len(image) != k or not graph.is_independent(image):
            raise CounterexampleFoundError.from_witness(
                "image {} is not an independent {}-set".format(
                    sorted(image), k), subset)
        if image in images:
            raise CounterexampleFoundError.from_witness(
                "image {} was already hit".format(sorted(image)), subset)
        images.add(image)
    logger.debug("Flip of %s at k=%d: %d -> %d", path.vertices, k,
                 len(source), target_count)
    return InjectionReport(path, k, len(source), target_count)


def broken_flips(graph: Graph, path: EscapePath, k: int) \
        -> List[Tuple[FrozenSet[int], FrozenSet[int]]]:
    """Independent ``k``-sets whose unchecked flip is not independent

    Only sets that miss ``path.start`` can appear. Two shapes occur: a set
    holding ``path.end`` and a neighbor of ``v1`` off the path, and a set
    holding ``v2`` and a neighbor of ``v(n-1)`` off the path.

    Returns: ``(set, image)`` pairs in lexicographic order of the sets

    """
    found = []
    for subset in enumerate_independent_sets(graph, k):
        image = flip_p_unchecked(path, subset)
        if not graph.is_independent(image):
            found.append((frozenset(subset), image))
    return found
