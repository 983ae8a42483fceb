# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.

"""Generators for the graph families whose stars we study

Every generator is a pure function with a fixed vertex labeling, so star
tables of generated graphs are reproducible byte for byte. The labelings:

* Path: ``0 - 1 - ... - n-1``.
* Spider: center ``0``; legs in the given order, each numbered outwards
  from the center.
* Caterpillar: spine ``0..s-1`` in path order, then the pendant leaves of
  spine vertex ``0``, then those of ``1``, and so on.
* Lobster: spine ``0..s-1`` in path order, then for each spine vertex in
  order, each of its attachments in order, numbered outwards.
* T_m: ``v0 = 0``, ``v1 = 1``, ``v2 = 2``; then the middle vertices of
  the ``m`` two-edge paths at ``v1``, then the middles at ``v2``, then the
  end vertices at ``v1``, then the ends at ``v2``.
* Sunlet and generalized sunlet: cycle ``0..n-1``; then the pendant path
  of cycle vertex ``0`` numbered outwards, then that of ``1``, and so on.
  With all pendant lengths 1 the pendant of ``i`` is ``n + i``.
* Tree: uniform random labelled tree decoded from a Prüfer sequence.

"""

import heapq
import logging
import random
from enum import Enum
from itertools import combinations_with_replacement, product
from typing import (Any, Dict, Iterable, List, NamedTuple, Optional,
                    Sequence, Tuple)
from hkstars.base_utils import parse_int_list
from hkstars.exceptions import (TooSmallError, NotASpiderError,
                                LengthMismatchError, BadAttachmentLengthError,
                                MissingSeedError, FamilySpecError)
from hkstars.graph import Edge, Graph, build_graph

logger = logging.getLogger(__name__)


class FamilyKind(Enum):
    """The graph families :py:func:`build_family` can generate

    Values are the names used in the compact text form.
    """
    PATH = "path"
    SPIDER = "spider"
    CATERPILLAR = "caterpillar"
    LOBSTER = "lobster"
    SUNLET = "sunlet"
    GENERALIZED_SUNLET = "gsunlet"
    TM = "tm"
    TREE = "tree"


# Inclusive parameter ranges of the seeded random model of each family
RANDOM_MODELS = {
    FamilyKind.PATH: {"n": (2, 12)},
    FamilyKind.SPIDER: {"legs": (3, 5), "leg_length": (1, 3)},
    FamilyKind.CATERPILLAR: {"spine": (1, 6), "leaves": (0, 2)},
    FamilyKind.LOBSTER: {"spine": (1, 4), "attachments": (0, 2),
                         "length": (1, 2)},
    FamilyKind.SUNLET: {"n": (3, 8)},
    FamilyKind.GENERALIZED_SUNLET: {"n": (3, 6), "length": (1, 2)},
    FamilyKind.TM: {"m": (1, 5)},
    FamilyKind.TREE: {"n": (2, 12)},
}  # type: Dict[FamilyKind, Dict[str, Tuple[int, int]]]

RANDOM_PREFIX = "random-"
SEED_SEP = "@"


class FamilySpec(NamedTuple):
    """Parametric description of one member of a graph family

    ``params`` depends on ``kind``:

    * ``PATH``, ``SUNLET``, ``TM``, ``TREE``: ``(n,)`` or ``(m,)``
    * ``SPIDER``: the leg lengths
    * ``CATERPILLAR``: ``(spine_len, leaf_counts)``
    * ``LOBSTER``: ``(spine_len, attachments)`` where ``attachments`` holds
      one tuple of pendant path lengths per spine vertex
    * ``GENERALIZED_SUNLET``: ``(n, pendant_lengths)``

    Empty ``params`` together with a ``seed`` asks for a random member.

    Attributes:
        kind: The family
        params: Kind-specific parameters
        seed: Randomness seed, or ``None`` for deterministic members
    """
    kind: FamilyKind
    params: Tuple[Any, ...] = ()
    seed: Optional[int] = None

    def to_text(self) -> str:
        """Compact text form accepted by :py:func:`parse_family_spec`

        >>> FamilySpec(FamilyKind.CATERPILLAR, (4, (2, 0, 1, 3))).to_text()
        'caterpillar:4:2,0,1,3'
        >>> FamilySpec(FamilyKind.LOBSTER, seed=7).to_text()
        'random-lobster@7'

        """
        name = self.kind.value
        if not self.params:
            text = RANDOM_PREFIX + name
        elif self.kind is FamilyKind.SPIDER:
            text = name + ":" + _ints(self.params)
        elif self.kind in (FamilyKind.CATERPILLAR,
                           FamilyKind.GENERALIZED_SUNLET):
            text = "{}:{}:{}".format(name, self.params[0],
                                     _ints(self.params[1]))
        elif self.kind is FamilyKind.LOBSTER:
            text = "{}:{}:{}".format(name, self.params[0], "/".join(
                _ints(att) for att in self.params[1]))
        else:
            text = "{}:{}".format(name, self.params[0])
        if self.seed is not None:
            text += SEED_SEP + str(self.seed)
        return text

    def __str__(self) -> str:
        return self.to_text()


def _ints(values: Iterable[int]) -> str:
    return ",".join(str(v) for v in values)


def parse_family_spec(text: str, seed: Optional[int] = None) -> FamilySpec:
    """Parse the compact text form of a family member

    >>> parse_family_spec("tm:3")
    FamilySpec(kind=<FamilyKind.TM: 'tm'>, params=(3,), seed=None)
    >>> parse_family_spec("caterpillar:4:2,0,1,3").params
    (4, (2, 0, 1, 3))
    >>> parse_family_spec("lobster:3:1,2//2,2").params
    (3, ((1, 2), (), (2, 2)))
    >>> parse_family_spec("random-lobster@7").seed
    7

    Args:
        text: The text, e.g. ``sunlet:5`` or ``random-caterpillar@3``
        seed: Seed to use when ``text`` does not embed one

    Returns: The parsed spec

    Raises:
        FamilySpecError: When ``text`` is not a valid spec

    """
    body = text.strip()
    if SEED_SEP in body:
        body, seed_text = body.rsplit(SEED_SEP, 1)
        if not seed_text.isdecimal():
            raise FamilySpecError("Bad seed '{}' in '{}'".format(seed_text,
                                                                   text))
        seed = int(seed_text)
    random_member = body.startswith(RANDOM_PREFIX)
    if random_member:
        body = body[len(RANDOM_PREFIX):]
    fields = body.split(":")
    try:
        kind = FamilyKind(fields[0])
    except ValueError:
        raise FamilySpecError("Unknown family '{}' in '{}'; expected one of "
                              "{}".format(fields[0], text,
                                          [k.value for k in FamilyKind])) \
            from None
    if random_member:
        if len(fields) != 1:
            raise FamilySpecError("Random spec '{}' takes no "
                                  "parameters".format(text))
        return FamilySpec(kind, (), seed)

    try:
        params = _parse_params(kind, fields[1:])
    except ValueError as error:
        if isinstance(error, FamilySpecError):
            raise
        raise FamilySpecError("Bad parameters in '{}': {}".format(text,
                                                                  error))
    return FamilySpec(kind, params, seed)


def _parse_params(kind: FamilyKind, fields: List[str]) -> Tuple[Any, ...]:
    expected = 2 if kind in (FamilyKind.CATERPILLAR, FamilyKind.LOBSTER,
                             FamilyKind.GENERALIZED_SUNLET) else 1
    if len(fields) != expected:
        raise FamilySpecError("'{}' takes {} parameter field(s), got "
                              "{}".format(kind.value, expected, len(fields)))
    if kind is FamilyKind.SPIDER:
        return tuple(parse_int_list(fields[0]))
    if expected == 1:
        values = parse_int_list(fields[0])
        if len(values) != 1:
            raise FamilySpecError("'{}' needs a single count".format(
                kind.value))
        return (values[0],)
    head = parse_int_list(fields[0])
    if len(head) != 1:
        raise FamilySpecError("'{}' needs a single count before the "
                              "list".format(kind.value))
    if kind is FamilyKind.LOBSTER:
        return (head[0], tuple(tuple(parse_int_list(att))
                               for att in fields[1].split("/")))
    return (head[0], tuple(parse_int_list(fields[1])))


def gen_path(n: int) -> Graph:
    """Path on ``n`` vertices

    >>> gen_path(3).edges
    ((0, 1), (1, 2))

    Raises:
        TooSmallError: If ``n < 2``

    """
    if n < 2:
        raise TooSmallError("A path needs at least 2 vertices, got "
                            "{}".format(n))
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def _hang_path(edges: List[Edge], anchor: int, length: int,
               next_id: int) -> int:
    """Append a path of ``length`` edges hanging from ``anchor``

    Returns: The next unused vertex id

    """
    prev = anchor
    for _ in range(length):
        edges.append((prev, next_id))
        prev = next_id
        next_id += 1
    return next_id


def gen_spider(leg_lengths: Sequence[int]) -> Graph:
    """Spider with center ``0`` and one leg per entry of ``leg_lengths``

    >>> gen_spider([1, 1, 1]).degrees()
    (3, 1, 1, 1)

    Raises:
        NotASpiderError: With fewer than three legs
        TooSmallError: If a leg has no edges

    """
    if len(leg_lengths) < 3:
        raise NotASpiderError("A spider needs at least 3 legs, got "
                              "{}".format(len(leg_lengths)))
    if any(length < 1 for length in leg_lengths):
        raise TooSmallError("Spider legs need at least 1 edge, got "
                            "{}".format(list(leg_lengths)))
    edges = []  # type: List[Edge]
    next_id = 1
    for length in leg_lengths:
        next_id = _hang_path(edges, 0, length, next_id)
    return build_graph(next_id, edges)


def gen_caterpillar(spine_len: int, leaf_counts: Sequence[int]) -> Graph:
    """Caterpillar with a spine path and pendant leaves on spine vertices

    >>> gen_caterpillar(2, [2, 2]).n
    6

    Args:
        spine_len: Number of spine vertices
        leaf_counts: Pendant leaves at each spine vertex

    Raises:
        LengthMismatchError: If ``len(leaf_counts) != spine_len``
        TooSmallError: On an empty spine, a negative count, or a result with
            fewer than two vertices

    """
    if spine_len < 1:
        raise TooSmallError("Caterpillar spine needs at least 1 vertex")
    if len(leaf_counts) != spine_len:
        raise LengthMismatchError(
            "{} leaf counts given for a spine of {} vertices".format(
                len(leaf_counts), spine_len))
    if any(count < 0 for count in leaf_counts):
        raise TooSmallError("Leaf counts must be non-negative, got "
                            "{}".format(list(leaf_counts)))
    edges = [(i, i + 1) for i in range(spine_len - 1)]
    next_id = spine_len
    for i, count in enumerate(leaf_counts):
        for _ in range(count):
            next_id = _hang_path(edges, i, 1, next_id)
    if next_id < 2:
        raise TooSmallError("Caterpillar would have a single vertex")
    return build_graph(next_id, edges)


def gen_lobster(spine_len: int,
                attachments: Sequence[Sequence[int]]) -> Graph:
    """Lobster with pendant paths of length 1 or 2 on a spine path

    >>> gen_lobster(1, [[2, 2, 2]]) == gen_spider([2, 2, 2])
    True

    Args:
        spine_len: Number of spine vertices
        attachments: For each spine vertex, the lengths of the paths
            hanging from it

    Raises:
        LengthMismatchError: If ``len(attachments) != spine_len``
        BadAttachmentLengthError: If a length is not 1 or 2
        TooSmallError: On an empty spine or a single-vertex result

    """
    if spine_len < 1:
        raise TooSmallError("Lobster spine needs at least 1 vertex")
    if len(attachments) != spine_len:
        raise LengthMismatchError(
            "{} attachment lists given for a spine of {} vertices".format(
                len(attachments), spine_len))
    edges = [(i, i + 1) for i in range(spine_len - 1)]
    next_id = spine_len
    for i, lengths in enumerate(attachments):
        for length in lengths:
            if length not in (1, 2):
                raise BadAttachmentLengthError(
                    "Attachment length {} at spine vertex {} is not 1 or "
                    "2".format(length, i))
            next_id = _hang_path(edges, i, length, next_id)
    if next_id < 2:
        raise TooSmallError("Lobster would have a single vertex")
    return build_graph(next_id, edges)


def gen_tm(m: int) -> Graph:
    """The tree T_m: two groups of ``m`` two-edge paths joined through v0

    >>> g = gen_tm(2)
    >>> g.n, g.neighbors(0), g.degree(1)
    (11, (1, 2), 3)

    Raises:
        TooSmallError: If ``m < 1``

    """
    if m < 1:
        raise TooSmallError("T_m needs m >= 1, got {}".format(m))
    edges = [(0, 1), (0, 2)]
    middle = 3
    end = 3 + 2 * m
    for hub in (1, 2):
        for _ in range(m):
            edges.append((hub, middle))
            edges.append((middle, end))
            middle += 1
            end += 1
    return build_graph(4 * m + 3, edges)


def gen_sunlet(n: int) -> Graph:
    """Cycle ``0..n-1`` with pendant vertex ``n + i`` at each ``i``

    >>> gen_sunlet(3).degrees()
    (3, 3, 3, 1, 1, 1)

    Raises:
        TooSmallError: If ``n < 3``

    """
    return gen_generalized_sunlet(n, [1] * max(n, 0))


def gen_generalized_sunlet(n: int, pendant_lengths: Sequence[int]) -> Graph:
    """Cycle ``0..n-1`` with a pendant path at every cycle vertex

    Pendant lengths may repeat.

    >>> gen_generalized_sunlet(3, [1, 2, 3]).n
    9

    Raises:
        TooSmallError: If ``n < 3`` or a pendant length is below 1
        LengthMismatchError: If ``len(pendant_lengths) != n``

    """
    if n < 3:
        raise TooSmallError("A sunlet cycle needs at least 3 vertices, got "
                            "{}".format(n))
    if len(pendant_lengths) != n:
        raise LengthMismatchError(
            "{} pendant lengths given for a cycle of {} vertices".format(
                len(pendant_lengths), n))
    if any(length < 1 for length in pendant_lengths):
        raise TooSmallError("Pendant paths need at least 1 edge, got "
                            "{}".format(list(pendant_lengths)))
    edges = [(i, (i + 1) % n) for i in range(n)]
    next_id = n
    for i, length in enumerate(pendant_lengths):
        next_id = _hang_path(edges, i, length, next_id)
    return build_graph(next_id, edges)


def gen_prufer_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labelled tree on ``n`` vertices

    Raises:
        TooSmallError: If ``n < 2``

    """
    if n < 2:
        raise TooSmallError("A tree needs at least 2 vertices, got "
                            "{}".format(n))
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    remaining = [1] * n
    for v in sequence:
        remaining[v] += 1
    heap = [v for v in range(n) if remaining[v] == 1]
    heapq.heapify(heap)
    edges = []  # type: List[Edge]
    for v in sequence:
        leaf = heapq.heappop(heap)
        edges.append((leaf, v))
        remaining[v] -= 1
        if remaining[v] == 1:
            heapq.heappush(heap, v)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return build_graph(n, edges)


def _draw(rng: random.Random, bounds: Tuple[int, int]) -> int:
    return rng.randint(bounds[0], bounds[1])


def random_params(kind: FamilyKind, seed: int) -> Tuple[Any, ...]:
    """Draw the parameters of a random member of ``kind``

    The same ``kind`` and ``seed`` always give the same parameters. Models
    are described by :py:const:`RANDOM_MODELS`.

    """
    rng = random.Random(seed)
    model = RANDOM_MODELS[kind]
    if kind is FamilyKind.SPIDER:
        return tuple(_draw(rng, model["leg_length"])
                     for _ in range(_draw(rng, model["legs"])))
    if kind is FamilyKind.CATERPILLAR:
        spine = _draw(rng, model["spine"])
        counts = [_draw(rng, model["leaves"]) for _ in range(spine)]
        if spine == 1 and counts[0] == 0:
            counts[0] = 1
        return (spine, tuple(counts))
    if kind is FamilyKind.LOBSTER:
        spine = _draw(rng, model["spine"])
        attachments = [
            tuple(_draw(rng, model["length"])
                  for _ in range(_draw(rng, model["attachments"])))
            for _ in range(spine)]
        if spine == 1 and not attachments[0]:
            attachments[0] = (1,)
        return (spine, tuple(attachments))
    if kind is FamilyKind.GENERALIZED_SUNLET:
        n = _draw(rng, model["n"])
        return (n, tuple(_draw(rng, model["length"]) for _ in range(n)))
    return (_draw(rng, next(iter(model.values()))),)


def gen_random_family(spec: FamilySpec) -> Graph:
    """Random member of ``spec.kind``, fully determined by ``spec.seed``

    Parameters already present in ``spec`` are kept; only missing ones are
    drawn. Trees always need the seed for their Prüfer sequence.

    Raises:
        MissingSeedError: If ``spec.seed`` is ``None``

    """
    if spec.seed is None:
        raise MissingSeedError("Random member of '{}' needs a seed".format(
            spec.kind.value))
    params = spec.params or random_params(spec.kind, spec.seed)
    logger.debug("Random %s from seed %d: %s", spec.kind.value, spec.seed,
                 params)
    if spec.kind is FamilyKind.TREE:
        return gen_prufer_tree(params[0], random.Random(spec.seed))
    return build_family(FamilySpec(spec.kind, params))


def resolve(spec: FamilySpec) -> FamilySpec:
    """Replace a random spec by the deterministic spec it stands for

    Trees stay random because their shape is not a parameter.

    """
    if spec.params or spec.seed is None or spec.kind is FamilyKind.TREE:
        return spec
    return FamilySpec(spec.kind, random_params(spec.kind, spec.seed))


def build_family(spec: FamilySpec) -> Graph:
    """Generate the graph described by ``spec``

    >>> build_family(parse_family_spec("tm:3")).n
    15

    Raises:
        FamilySpecError: When the parameters are invalid for the kind
        NotASpiderError: For spider specs with fewer than three legs

    """
    if not spec.params or spec.kind is FamilyKind.TREE:
        return gen_random_family(spec)
    kind, params = spec.kind, spec.params
    if kind is FamilyKind.PATH:
        return gen_path(params[0])
    if kind is FamilyKind.SPIDER:
        return gen_spider(params)
    if kind is FamilyKind.CATERPILLAR:
        return gen_caterpillar(params[0], params[1])
    if kind is FamilyKind.LOBSTER:
        return gen_lobster(params[0], params[1])
    if kind is FamilyKind.SUNLET:
        return gen_sunlet(params[0])
    if kind is FamilyKind.GENERALIZED_SUNLET:
        return gen_generalized_sunlet(params[0], params[1])
    return gen_tm(params[0])


def all_caterpillar_specs(max_spine: int, max_leaves: int) \
        -> List[FamilySpec]:
    """Every caterpillar spec with a spine of at most ``max_spine`` vertices
    and at most ``max_leaves`` leaves per spine vertex

    Specs that would give a single vertex are skipped.

    >>> len(all_caterpillar_specs(2, 1))
    5

    """
    specs = []
    for spine in range(1, max_spine + 1):
        for counts in product(range(max_leaves + 1), repeat=spine):
            if spine + sum(counts) >= 2:
                specs.append(FamilySpec(FamilyKind.CATERPILLAR,
                                        (spine, counts)))
    return specs


def all_spider_specs(max_legs: int, max_leg_length: int) -> List[FamilySpec]:
    """Every spider with 3 to ``max_legs`` legs of length at most
    ``max_leg_length``, one per isomorphism class

    >>> len(all_spider_specs(3, 2))
    4

    """
    specs = []
    for legs in range(3, max_legs + 1):
        for lengths in combinations_with_replacement(
                range(max_leg_length, 0, -1), legs):
            specs.append(FamilySpec(FamilyKind.SPIDER, tuple(lengths)))
    return specs


def random_specs(kind: FamilyKind, seeds: Iterable[int]) -> List[FamilySpec]:
    """One random spec of ``kind`` per seed

    """
    return [FamilySpec(kind, (), seed) for seed in seeds]
