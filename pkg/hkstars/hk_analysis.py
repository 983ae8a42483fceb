# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.

"""HK verdicts and the classification of largest-star centers

A graph *satisfies HK* if for every ``k`` some pendant vertex centers a star
of maximum size among all stars of ``k``-sets. Sizes ``k`` beyond the
independence number give only empty stars; they satisfy HK vacuously and are
left out of reports.

Proved claims checked here:

* every vertex with an escape path has a star no larger than the star at
  the pendant end of that path, for every ``k``;
* caterpillars, spiders and sunlets (also with longer pendant paths)
  satisfy HK;
* in a lobster, a largest-star center that is neither a leaf nor a spinal
  vertex of degree 2 is always tied with a leaf.

A failed claim can only come from a counting bug; it is reported as a
theorem violation. Graphs outside these families may fail HK legitimately
(``T_m`` does for ``5 <= k <= 2m + 1``); that is an *HK failure*, not a
violation.

"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import (Dict, FrozenSet, Iterator, List, NamedTuple, Optional,
                    Sequence, Tuple)
from hkstars.base_utils import argmax_set
from hkstars.exceptions import (NotASpiderError, TheoremViolationError)
from hkstars.families import FamilyKind, FamilySpec, build_family, resolve
from hkstars.flip import find_escape_paths
from hkstars.graph import (Graph, VertexRole, decompose_lobster,
                           is_caterpillar, is_lobster, is_spider, leaves,
                           roles_of, vertex_roles)
from hkstars.star_count import Engine, StarTable, star_table

logger = logging.getLogger(__name__)

# Families proved to satisfy HK whatever the parameters
HK_FAMILIES = frozenset({FamilyKind.PATH, FamilyKind.SPIDER,
                         FamilyKind.CATERPILLAR, FamilyKind.SUNLET,
                         FamilyKind.GENERALIZED_SUNLET})

# Roles a largest-star center of a lobster may have without a tied leaf
LOBSTER_CENTER_ROLES = frozenset({VertexRole.LEAF, VertexRole.SPINAL_DEG2})


def _vertex_list(vertices: FrozenSet[int]) -> str:
    return " ".join(str(v) for v in sorted(vertices))


class HKRow(NamedTuple):
    """Largest stars of one size ``k``

    Attributes:
        k: Set size
        max_star_size: Size of the largest star
        argmax_vertices: Every vertex centering a largest star
        contains_pendant: Whether a pendant vertex is among them
        center_roles: :py:class:`VertexRole` of each argmax vertex, in
            increasing vertex order
    """
    k: int
    max_star_size: int
    argmax_vertices: FrozenSet[int]
    contains_pendant: bool
    center_roles: Tuple[VertexRole, ...]

    def to_dict(self) -> dict:
        """JSON-ready form; the star size is a decimal string

        """
        return {"k": self.k, "max_star_size": str(self.max_star_size),
                "argmax_vertices": sorted(self.argmax_vertices),
                "contains_pendant": self.contains_pendant,
                "center_roles": [str(r) for r in self.center_roles]}

    def to_csv_row(self) -> List[str]:
        """Fields in the order of :py:const:`HK_CSV_HEADER`

        """
        return [str(self.k), str(self.max_star_size),
                _vertex_list(self.argmax_vertices),
                str(self.contains_pendant).lower(),
                " ".join(str(r) for r in self.center_roles)]


HK_CSV_HEADER = ["k", "max_star_size", "argmax_vertices", "contains_pendant",
                 "center_roles"]


class HKReport(NamedTuple):
    """Per-``k`` largest stars of a graph and the overall HK verdict

    Attributes:
        n: Number of vertices
        alpha: Largest ``k`` reported
        rows: One :py:class:`HKRow` per ``k = 1..alpha``
    """
    n: int
    alpha: int
    rows: Tuple[HKRow, ...]

    @property
    def failing_ks(self) -> Tuple[int, ...]:
        """Every ``k`` at which no pendant vertex centers a largest star

        """
        return tuple(row.k for row in self.rows if not row.contains_pendant)

    @property
    def holds(self) -> bool:
        """Whether the graph satisfies HK for every reported ``k``

        """
        return not self.failing_ks

    @property
    def first_failing_k(self) -> Optional[int]:
        """Smallest failing ``k``, or ``None`` if HK holds

        """
        failing = self.failing_ks
        return failing[0] if failing else None

    @property
    def witnesses(self) -> FrozenSet[int]:
        """Largest-star centers at the first failing ``k`` (empty if none)

        """
        first = self.first_failing_k
        if first is None:
            return frozenset()
        return self.rows[first - 1].argmax_vertices

    def row(self, k: int) -> HKRow:
        """The row for size ``k``

        """
        return self.rows[k - 1]

    def to_dict(self) -> dict:
        """JSON-ready form

        """
        return {"n": self.n, "alpha": self.alpha, "hk_holds": self.holds,
                "first_failing_k": self.first_failing_k,
                "witnesses": sorted(self.witnesses),
                "rows": [row.to_dict() for row in self.rows]}


def hk_rows(graph: Graph, table: StarTable) -> Iterator[HKRow]:
    """Build the per-``k`` rows of an HK report from a star table

    """
    pendants = leaves(graph)
    roles = vertex_roles(graph)
    for k in range(1, table.alpha + 1):
        column = table.column(k)
        argmax = argmax_set(column)
        yield HKRow(k, column[min(argmax)], argmax, bool(argmax & pendants),
                    roles_of(roles, argmax))


def hk_verdict(graph: Graph, k_max: Optional[int] = None,
               engine: Engine = Engine.AUTO,
               table: Optional[StarTable] = None) -> HKReport:
    """Check for each ``k`` whether a pendant vertex centers a largest star

    >>> from hkstars.families import gen_tm
    >>> report = hk_verdict(gen_tm(3))
    >>> report.first_failing_k, sorted(report.witnesses)
    (5, [0])

    Args:
        graph: The graph
        k_max: Largest ``k`` to report, or ``None`` for all up to the
            independence number
        engine: Star counting engine
        table: Precomputed star table to use instead of counting

    Returns: The report

    """
    if table is None:
        table = star_table(graph, engine, k_max)
    rows = tuple(row for row in hk_rows(graph, table)
                 if k_max is None or row.k <= k_max)
    return HKReport(graph.n, len(rows), rows)


class CenterClassification(NamedTuple):
    """Roles of the largest-star centers of a lobster at one ``k``

    Attributes:
        k: Set size
        argmax_vertices: Every vertex centering a largest star
        by_role: Argmax vertices grouped by role
        violations: Argmax vertices with a role outside
            :py:const:`LOBSTER_CENTER_ROLES` while no leaf is in the argmax
    """
    k: int
    argmax_vertices: FrozenSet[int]
    by_role: Dict[VertexRole, FrozenSet[int]]
    violations: FrozenSet[int]


def classify_lobster_centers(lobster: Graph, k: int,
                             engine: Engine = Engine.AUTO,
                             table: Optional[StarTable] = None,
                             strict: bool = False) -> CenterClassification:
    """Classify the largest-star centers of a lobster at size ``k``

    Every center must be a leaf or a spinal vertex of degree 2, unless a
    leaf ties with it.

    >>> from hkstars.families import gen_tm
    >>> result = classify_lobster_centers(gen_tm(3), 5)
    >>> sorted(result.argmax_vertices), [str(r) for r in result.by_role]
    ([0], ['SpinalDeg2'])

    Args:
        lobster: A lobster
        k: Set size, between 1 and the independence number
        engine: Star counting engine
        table: Precomputed star table to use instead of counting
        strict: Raise instead of returning when there is a violation

    Returns: The classification

    Raises:
        NotLobsterError: If ``lobster`` is not a lobster
        NotATreeError: If ``lobster`` is not a tree
        ValueError: If ``k`` is outside ``1..alpha``
        TheoremViolationError: With ``strict`` set, on a violation

    """
    roles = decompose_lobster(lobster).roles
    if table is None:
        table = star_table(lobster, engine)
    if not 1 <= k <= table.alpha:
        raise ValueError("k = {} is outside 1..{}".format(k, table.alpha))
    argmax = argmax_set(table.column(k))
    by_role = {}  # type: Dict[VertexRole, FrozenSet[int]]
    for v in sorted(argmax):
        by_role[roles[v]] = by_role.get(roles[v], frozenset()) | {v}
    if VertexRole.LEAF in by_role:
        violations = frozenset()  # type: FrozenSet[int]
    else:
        violations = frozenset(v for v in argmax
                               if roles[v] not in LOBSTER_CENTER_ROLES)
    if violations:
        logger.error("Lobster centers %s at k=%d are neither leaves nor "
                     "spinal of degree 2", sorted(violations), k)
        if strict:
            raise TheoremViolationError(
                "Largest stars at k={} centered at {} with roles {}".format(
                    k, sorted(violations),
                    [str(roles[v]) for v in sorted(violations)]))
    return CenterClassification(k, argmax, by_role, violations)


def escape_bound_violations(graph: Graph, table: StarTable) \
        -> List[Tuple[int, int, int]]:
    """Find stars larger than the star at the end of an escape path

    Returns: ``(v, end, k)`` for every vertex ``v``, end of an escape path
        from ``v``, and ``k`` where the star of ``v`` is larger. Always
        empty unless counting is broken.

    """
    found = []
    for v in graph.vertices:
        ends = sorted({path.end for path in find_escape_paths(graph, v)})
        for end in ends:
            for k in range(1, table.alpha + 1):
                if table.entry(v, k) > table.entry(end, k):
                    found.append((v, end, k))
    return found


def spider_check(graph: Graph, engine: Engine = Engine.AUTO) -> bool:
    """HK verdict of a spider, after checking its center reaches every leaf

    >>> from hkstars.families import gen_spider
    >>> spider_check(gen_spider([3, 1, 2]))
    True

    Args:
        graph: A spider
        engine: Star counting engine

    Returns: Whether the spider satisfies HK

    Raises:
        NotASpiderError: If ``graph`` is not a spider
        TheoremViolationError: If some leaf has no escape path from the
            center

    """
    if not is_spider(graph):
        raise NotASpiderError("{} is not a tree with exactly one vertex of "
                              "degree > 2".format(graph))
    center = max(graph.vertices, key=graph.degree)
    reached = {path.end for path in find_escape_paths(graph, center)}
    missing = leaves(graph) - reached
    if missing:
        raise TheoremViolationError(
            "Spider center {} has no escape path to leaves {}".format(
                center, sorted(missing)))
    return hk_verdict(graph, engine=engine).holds


class SweepEntry(NamedTuple):
    """Result of analysing one spec of a sweep

    Attributes:
        spec: The spec as given
        resolved: The deterministic spec it stands for
        report: HK report of the generated graph
        violations: Descriptions of failed proved claims
    """
    spec: FamilySpec
    resolved: FamilySpec
    report: HKReport
    violations: Tuple[str, ...]

    def to_dict(self) -> dict:
        """JSON-ready form

        """
        return {"spec": str(self.spec), "resolved": str(self.resolved),
                "hk_holds": self.report.holds,
                "failing_ks": list(self.report.failing_ks),
                "violations": list(self.violations),
                "report": self.report.to_dict()}


class SweepReport(NamedTuple):
    """Results of a family sweep in the order of the specs

    """
    entries: Tuple[SweepEntry, ...]

    @property
    def violations(self) -> List[Tuple[str, str]]:
        """``(spec, description)`` of every failed proved claim

        """
        return [(str(e.spec), msg) for e in self.entries
                for msg in e.violations]

    @property
    def hk_failures(self) -> List[Tuple[str, Tuple[int, ...]]]:
        """``(spec, failing ks)`` of every graph that fails HK

        """
        return [(str(e.spec), e.report.failing_ks) for e in self.entries
                if not e.report.holds]

    def to_dict(self) -> dict:
        """JSON-ready form

        """
        return {"specs": len(self.entries),
                "violations": [{"spec": s, "violation": m}
                               for s, m in self.violations],
                "entries": [e.to_dict() for e in self.entries]}


def claimed_violations(graph: Graph, spec: Optional[FamilySpec],
                       table: StarTable, report: HKReport) -> List[str]:
    """Check every proved claim that applies to ``graph``

    Args:
        graph: The graph
        spec: The spec it was generated from, if any; used to recognize
            sunlets
        table: Its star table
        report: Its HK report

    Returns: A description of each failed claim

    """
    problems = ["escape path from {} to {} has a larger start star at "
                "k={}".format(v, end, k)
                for v, end, k in escape_bound_violations(graph, table)]
    hk_claimed = (spec is not None and spec.kind in HK_FAMILIES) or \
        is_caterpillar(graph) or is_spider(graph)
    if hk_claimed and not report.holds:
        problems.append("HK fails at k={} although the graph is in a family "
                        "proved to satisfy HK".format(
                            list(report.failing_ks)))
    if is_lobster(graph):
        for k in range(1, report.alpha + 1):
            bad = classify_lobster_centers(graph, k, table=table).violations
            if bad:
                problems.append("lobster centers {} at k={} are neither "
                                "leaves nor spinal of degree 2".format(
                                    sorted(bad), k))
    return problems


def _sweep_one(args: Tuple[FamilySpec, Optional[int], Engine]) -> SweepEntry:
    spec, k_max, engine = args
    graph = build_family(spec)
    table = star_table(graph, engine, k_max)
    report = hk_verdict(graph, k_max, table=table)
    violations = claimed_violations(graph, spec, table, report)
    logger.debug("Swept %s: n=%d, failing ks %s", spec, graph.n,
                 report.failing_ks)
    return SweepEntry(spec, resolve(spec), report, tuple(violations))


def hk_sweep(specs: Sequence[FamilySpec], k_max: Optional[int] = None,
             engine: Engine = Engine.AUTO, jobs: int = 1) -> SweepReport:
    """Run :py:func:`hk_verdict` and all applicable claim checks over many
    family members

    Results come back in the order of ``specs`` whatever ``jobs`` is.

    Args:
        specs: The family members to analyse
        k_max: Largest ``k`` to analyse, or ``None`` for all
        engine: Star counting engine
        jobs: Number of worker processes; 1 runs in this process

    Returns: The merged report

    Raises:
        FamilySpecError: If a spec is invalid

    """
    work = [(spec, k_max, engine) for spec in specs]
    if jobs <= 1:
        entries = [_sweep_one(item) for item in work]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_sweep_one, work))
    report = SweepReport(tuple(entries))
    logger.info("Swept %d specs: %d HK failures, %d violations", len(specs),
                len(report.hk_failures), len(report.violations))
    return report
