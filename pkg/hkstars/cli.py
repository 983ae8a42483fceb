# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.

"""Command-line interface

Subcommands:

* ``gen`` writes a generated graph as an edge list.
* ``count`` writes the star table as ``vertex,k,count`` rows.
* ``flip`` writes the escape paths of a vertex and the checked injection
  of each path, as JSON.
* ``hk`` writes the per-``k`` largest stars and the HK verdict.
* ``check`` runs every built-in acceptance suite and writes a summary.

Output goes to stdout and logging to stderr. Exit codes are
:py:const:`EXIT_OK`, :py:const:`EXIT_USAGE` for bad arguments or input,
and :py:const:`EXIT_VIOLATION` when a proved claim fails or two engines
disagree, which can only mean a bug.

"""

import argparse
import csv
import json
import logging
import sys
from dataclasses import dataclass
from typing import (Callable, Iterable, List, NamedTuple, Optional, Sequence,
                    TextIO, Tuple)
from hkstars import families
from hkstars.edge_list import read_edge_list, write_edge_list
from hkstars.exceptions import (CounterexampleFoundError, EngineMismatchError,
                                HkStarsError, TheoremViolationError,
                                UsageError)
from hkstars.families import FamilyKind, FamilySpec, parse_family_spec
from hkstars.flip import (EscapePath, broken_flips, escape_paths_brute_force,
                          find_escape_paths, flip_on_path, verify_injection)
from hkstars.graph import Graph, build_graph, leaves
from hkstars.hk_analysis import (HK_CSV_HEADER, SweepReport,
                                 claimed_violations, hk_sweep, hk_verdict,
                                 spider_check)
from hkstars.star_count import (Engine, StarTable, check_engines,
                                compare_tables, enumerate_independent_sets,
                                star_table)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2

COMMANDS = ("gen", "count", "flip", "hk", "check")
FORMATS = ("csv", "json")
COUNT_CSV_HEADER = ["vertex", "k", "count"]
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

# Sizes of the seeded parts of the acceptance suites
CHECK_RANDOM_CATERPILLARS = 200
CHECK_RANDOM_GSUNLETS = 50
CHECK_RANDOM_LOBSTERS = 200
CHECK_RANDOM_TREES = 500
# Corpus graphs up to this size get exhaustive flip and escape-path checks
CHECK_CORPUS_MAX_N = 14

# Escape path 0-1-2-3 with a branch 4-5 at 0 and a branch 6-7 at 2
FLIP_DEMO_EDGES = [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (2, 6), (6, 7)]
FLIP_DEMO_PATH = EscapePath((0, 1, 2, 3))

CHECK_CORPUS_SPECS = ("path:2", "path:3", "path:6", "path:10", "sunlet:3",
                      "sunlet:4", "sunlet:5", "gsunlet:3:1,2,1",
                      "gsunlet:4:2,1,2,1", "spider:1,1,1", "spider:1,1,1,1",
                      "spider:2,2,2", "spider:3,1,2", "caterpillar:3:1,2,1",
                      "caterpillar:5:1,0,2,0,1", "lobster:3:1,2//2,2",
                      "lobster:2:2,1/2", "tm:1", "tm:2", "tm:3")


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs, parsed from ``argv``

    Attributes:
        command: One of :py:const:`COMMANDS`
        spec: Family spec text, if the graph is generated
        input_path: Edge-list file, if the graph is read
        engine: Star counting engine
        k_max: Largest ``k`` to report, or ``None`` for all
        fmt: One of :py:const:`FORMATS`
        seed: Seed for random specs (base seed for ``check``)
        jobs: Worker processes for sweeps
        verbosity: 0 for warnings, 1 for info, 2 or more for debug
        vertex: Start vertex for ``flip``
        k: Single set size for ``flip``, or ``None`` for all
        dual: Whether ``count`` also diffs every engine against the oracle
    """
    command: str
    spec: Optional[str] = None
    input_path: Optional[str] = None
    engine: Engine = Engine.AUTO
    k_max: Optional[int] = None
    fmt: str = "csv"
    seed: Optional[int] = None
    jobs: int = 1
    verbosity: int = 0
    vertex: Optional[int] = None
    k: Optional[int] = None
    dual: bool = False

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError("Unknown command '{}'".format(self.command))
        if self.k_max is not None and self.k_max < 1:
            raise UsageError("--kmax must be at least 1, got {}".format(
                self.k_max))
        if self.k is not None and self.k < 1:
            raise UsageError("--k must be at least 1, got {}".format(self.k))
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1, got {}".format(
                self.jobs))
        if self.command == "check":
            if self.spec is not None or self.input_path is not None:
                raise UsageError("check takes no graph source")
            return
        if (self.spec is None) == (self.input_path is None):
            raise UsageError("{} needs exactly one of --spec and "
                             "--input".format(self.command))
        if self.command == "gen" and self.spec is None:
            raise UsageError("gen needs --spec")
        if self.command == "flip" and self.vertex is None:
            raise UsageError("flip needs --vertex")

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        """Build from the result of :py:func:`build_parser`

        """
        return cls(command=args.command, spec=args.spec,
                   input_path=args.input, engine=args.engine,
                   k_max=args.kmax, fmt=args.format, seed=args.seed,
                   jobs=args.jobs, verbosity=args.verbose,
                   vertex=args.vertex, k=args.k, dual=args.check)


class _Parser(argparse.ArgumentParser):
    """Argument parser that raises instead of exiting on bad arguments

    """

    def error(self, message: str) -> None:  # type: ignore
        raise UsageError("{}\n{}".format(message, self.format_usage()))


def build_parser() -> argparse.ArgumentParser:
    """Parser for every subcommand

    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", help="family spec, e.g. tm:3, sunlet:5, "
                        "caterpillar:4:2,0,1,3, lobster:3:1,2//2,2, "
                        "random-lobster@7")
    common.add_argument("--input", help="edge-list file ('n <count>' then "
                        "one 'u v' pair per line)")
    common.add_argument("--engine", type=Engine, default=Engine.AUTO,
                        choices=list(Engine),
                        metavar="|".join(e.value for e in Engine))
    common.add_argument("--kmax", type=int, default=None,
                        help="largest set size to analyse")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for random specs; base seed for check")
    common.add_argument("--format", choices=FORMATS, default="csv")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker processes for sweeps")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = _Parser(prog="hkstars", description="Exact star sizes of "
                     "independent sets and HK verdicts for graph families")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True
    sub.add_parser("gen", parents=[common], help="write a generated graph")
    count = sub.add_parser("count", parents=[common],
                           help="write the star table")
    count.add_argument("--check", action="store_true",
                       help="also diff every engine against the oracle")
    flip = sub.add_parser("flip", parents=[common],
                          help="check escape-path flips from a vertex")
    flip.add_argument("--vertex", type=int, help="start vertex")
    flip.add_argument("--k", type=int, help="single set size to check")
    sub.add_parser("hk", parents=[common], help="write the HK report")
    sub.add_parser("check", parents=[common],
                   help="run every acceptance suite")
    for name in ("gen", "hk", "check"):
        sub.choices[name].set_defaults(check=False, vertex=None, k=None)
    count.set_defaults(vertex=None, k=None)
    flip.set_defaults(check=False)
    return parser


def parse_config(argv: Sequence[str]) -> RunConfig:
    """Parse ``argv`` (without the program name)

    Raises:
        UsageError: On bad or inconsistent arguments

    """
    return RunConfig.from_namespace(build_parser().parse_args(list(argv)))


def configure_logging(verbosity: int) -> None:
    """Send log records to stderr at a level chosen by ``-v`` flags

    """
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity,
                                                       logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level, format=LOG_FORMAT,
                        force=True)


def load_graph(config: RunConfig) -> Tuple[Graph, Optional[FamilySpec]]:
    """The graph named by the source in ``config``

    Returns: The graph and, for generated graphs, its spec

    """
    if config.spec is not None:
        spec = parse_family_spec(config.spec, config.seed)
        return families.build_family(spec), spec
    if config.input_path is None:
        raise UsageError("No graph source given")
    with open(config.input_path, "r", encoding="utf-8") as graph_file:
        return read_edge_list(graph_file), None


def _write_csv(out: TextIO, header: List[str],
               rows: Iterable[Sequence[object]]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _write_json(out: TextIO, data: object) -> None:
    json.dump(data, out, indent=2, sort_keys=True)
    out.write("\n")


def table_rows(table: StarTable) -> List[List[str]]:
    """Star table as ``vertex,k,count`` rows with decimal counts

    """
    return [[str(v), str(k), str(count)] for v, k, count in table.rows()]


def run_gen(config: RunConfig, out: TextIO) -> int:
    """Write the generated graph as an edge list

    """
    graph, _ = load_graph(config)
    write_edge_list(graph, out)
    return EXIT_OK


def run_count(config: RunConfig, out: TextIO) -> int:
    """Write the star table, optionally diffing every engine first

    """
    graph, _ = load_graph(config)
    table = star_table(graph, config.engine, config.k_max)
    if config.dual:
        compare_tables(table, check_engines(graph, config.k_max),
                       config.engine, Engine.ORACLE)
        logger.info("All engines agree on n=%d", graph.n)
    rows = table_rows(table)
    if config.fmt == "json":
        _write_json(out, {"rows": [dict(zip(COUNT_CSV_HEADER, row))
                                   for row in rows]})
    else:
        _write_csv(out, COUNT_CSV_HEADER, rows)
    return EXIT_OK


def run_flip(config: RunConfig, out: TextIO) -> int:
    """Write the escape paths of a vertex and the injection report of each
    path at each size

    """
    graph, _ = load_graph(config)
    vertex = config.vertex
    if vertex is None or not 0 <= vertex < graph.n:
        raise UsageError("Vertex {} is not in 0..{}".format(vertex,
                                                            graph.n - 1))
    paths = find_escape_paths(graph, vertex)
    if config.k is not None:
        sizes = [config.k]  # type: List[int]
    else:
        alpha = star_table(graph, config.engine, config.k_max).alpha
        sizes = list(range(1, alpha + 1))
    reports = [verify_injection(graph, path, k).to_dict()
               for path in paths for k in sizes]
    _write_json(out, {"vertex": vertex,
                      "escape_paths": [list(p.vertices) for p in paths],
                      "injections": reports})
    return EXIT_OK


def run_hk(config: RunConfig, out: TextIO) -> int:
    """Write the HK report; exit with :py:const:`EXIT_VIOLATION` if a proved
    claim fails for the graph

    """
    graph, spec = load_graph(config)
    table = star_table(graph, config.engine, config.k_max)
    report = hk_verdict(graph, config.k_max, table=table)
    if config.fmt == "json":
        _write_json(out, report.to_dict())
    else:
        _write_csv(out, HK_CSV_HEADER,
                   (row.to_csv_row() for row in report.rows))
    violations = claimed_violations(graph, spec, table, report)
    for problem in violations:
        logger.error("Theorem violation: %s", problem)
    return EXIT_VIOLATION if violations else EXIT_OK


class SuiteResult(NamedTuple):
    """Outcome of one acceptance suite

    Attributes:
        name: Suite name
        cases: Number of individual checks made
        failures: Description of each failed check
    """
    name: str
    cases: int
    failures: Tuple[str, ...]

    def to_dict(self) -> dict:
        """JSON-ready form

        """
        return {"suite": self.name, "cases": self.cases,
                "failures": list(self.failures)}


def check_corpus() -> List[Tuple[str, Graph]]:
    """Named small graphs for the exhaustive flip, escape-path and engine
    checks

    """
    corpus = [(text, families.build_family(parse_family_spec(text)))
              for text in CHECK_CORPUS_SPECS]
    corpus.append(("cycle:4", build_graph(4, [(0, 1), (1, 2), (2, 3),
                                              (0, 3)])))
    corpus.append(("flip-demo", flip_demo_graph()))
    return corpus


def flip_demo_graph() -> Graph:
    """Escape path ``0-1-2-3`` with a branch at ``v1 = 0`` and another at
    ``v(n-1) = 2``, on which the unchecked flip breaks independence both
    ways

    """
    return build_graph(8, FLIP_DEMO_EDGES)


def _sweep_suite(name: str, specs: List[FamilySpec],
                 config: RunConfig) -> SuiteResult:
    report = hk_sweep(specs, config.k_max, config.engine,
                      config.jobs)  # type: SweepReport
    failures = ["{}: {}".format(spec, problem)
                for spec, problem in report.violations]
    return SuiteResult(name, len(specs), tuple(failures))


def _seeds(config: RunConfig, count: int) -> range:
    base = config.seed or 0
    return range(base, base + count)


def suite_counterexample(config: RunConfig) -> SuiteResult:
    """T_3 and T_4 fail HK at exactly ``5 <= k <= 2m + 1``, with ``v0`` the
    only largest-star center, and satisfy it at every other ``k``

    """
    failures = []
    cases = 0
    for m in (3, 4):
        graph = families.gen_tm(m)
        table = star_table(graph, config.engine)
        report = hk_verdict(graph, table=table)
        pendants = sorted(leaves(graph))
        for row in report.rows:
            cases += 1
            if 5 <= row.k <= 2 * m + 1:
                v0_star = table.entry(0, row.k)
                if row.argmax_vertices != frozenset({0}) or any(
                        table.entry(leaf, row.k) >= v0_star
                        for leaf in pendants):
                    failures.append("tm:{} k={}: expected v0 alone above "
                                    "every leaf, argmax {}".format(
                                        m, row.k,
                                        sorted(row.argmax_vertices)))
            elif not row.contains_pendant:
                failures.append("tm:{} k={}: no pendant largest-star "
                                "center".format(m, row.k))
    return SuiteResult("counterexample", cases, tuple(failures))


def suite_caterpillars(config: RunConfig) -> SuiteResult:
    """Every small caterpillar and a seeded batch of random ones satisfy HK

    """
    specs = families.all_caterpillar_specs(5, 2) + families.random_specs(
        FamilyKind.CATERPILLAR, _seeds(config, CHECK_RANDOM_CATERPILLARS))
    return _sweep_suite("caterpillars", specs, config)


def suite_sunlets(config: RunConfig) -> SuiteResult:
    """Sunlets on 3 to 8 cycle vertices and random generalized sunlets
    satisfy HK

    """
    specs = [FamilySpec(FamilyKind.SUNLET, (n,)) for n in range(3, 9)]
    specs += families.random_specs(FamilyKind.GENERALIZED_SUNLET,
                                   _seeds(config, CHECK_RANDOM_GSUNLETS))
    return _sweep_suite("sunlets", specs, config)


def suite_spiders(config: RunConfig) -> SuiteResult:
    """Every spider with at most 5 legs of length at most 3 satisfies HK and
    its center has an escape path to every leaf

    """
    specs = families.all_spider_specs(5, 3)
    swept = _sweep_suite("spiders", specs, config)
    failures = list(swept.failures)
    for spec in specs:
        try:
            if not spider_check(families.build_family(spec), config.engine):
                failures.append("{}: HK fails".format(spec))
        except TheoremViolationError as error:
            failures.append("{}: {}".format(spec, error))
    return SuiteResult("spiders", 2 * len(specs), tuple(failures))


def suite_lobsters(config: RunConfig) -> SuiteResult:
    """Largest-star centers of random lobsters are leaves or spinal vertices
    of degree 2 unless tied with a leaf

    """
    specs = families.random_specs(FamilyKind.LOBSTER,
                                  _seeds(config, CHECK_RANDOM_LOBSTERS))
    return _sweep_suite("lobsters", specs, config)


def _path_flip_failures(n: int) -> List[str]:
    path = families.gen_path(n)
    failures = []
    for k in range(0, (n + 1) // 2 + 1):
        sets = {frozenset(s) for s in enumerate_independent_sets(path, k)}
        images = {flip_on_path(path, s) for s in sets}
        if images != sets:
            failures.append("path:{} k={}: flip is not a bijection".format(
                n, k))
        if any(flip_on_path(path, flip_on_path(path, s)) != s
               for s in sets):
            failures.append("path:{} k={}: flip is not an "
                            "involution".format(n, k))
    return failures


def suite_flip(config: RunConfig) -> SuiteResult:
    """Flips of paths are bijections, flips of escape paths inject stars
    into stars, and the unchecked flip breaks independence in both known
    ways

    """
    failures = []  # type: List[str]
    cases = 0
    for n in range(2, 11):
        cases += 1
        failures.extend(_path_flip_failures(n))
    for name, graph in check_corpus():
        if graph.n > CHECK_CORPUS_MAX_N:
            continue
        alpha = star_table(graph, config.engine).alpha
        for v in graph.vertices:
            for path in find_escape_paths(graph, v):
                for k in range(1, alpha + 1):
                    cases += 1
                    try:
                        report = verify_injection(graph, path, k)
                    except CounterexampleFoundError as error:
                        failures.append("{}: {}".format(name, error))
                        continue
                    if not report.bounded:
                        failures.append("{}: star of {} exceeds star of {} "
                                        "at k={}".format(name, path.start,
                                                         path.end, k))
    cases += 1
    failures.extend(_demo_failure_modes())
    return SuiteResult("flip", cases, tuple(failures))


def _demo_failure_modes() -> List[str]:
    graph = flip_demo_graph()
    path = FLIP_DEMO_PATH
    first, second = path.vertices[1], path.vertices[-2]
    outside_start = set(graph.neighbors(path.start)) - set(path.vertices)
    outside_penult = set(graph.neighbors(second)) - set(path.vertices)
    broken = [subset for subset, _ in broken_flips(graph, path, 2)]
    modes = [
        ("end with a neighbor of v1", lambda s: path.end in s and bool(
            s & outside_start)),
        ("v2 with a neighbor of v(n-1)", lambda s: first in s and bool(
            s & outside_penult)),
    ]  # type: List[Tuple[str, Callable[[frozenset], bool]]]
    return ["flip-demo: no broken flip of shape '{}'".format(label)
            for label, shape in modes if not any(shape(s) for s in broken)]


def suite_engines(config: RunConfig) -> SuiteResult:
    """Every engine gives the same star table, and the table satisfies the
    handshake identity, on random trees and on the corpus

    """
    graphs = [(str(spec), families.build_family(spec)) for spec in
              families.random_specs(FamilyKind.TREE,
                                    _seeds(config, CHECK_RANDOM_TREES))]
    graphs += [(name, graph) for name, graph in check_corpus()
               if graph.n <= CHECK_CORPUS_MAX_N]
    failures = []
    for name, graph in graphs:
        try:
            table = check_engines(graph)
        except EngineMismatchError as error:
            failures.append("{}: {}".format(name, error))
            continue
        if not table.handshake_holds():
            failures.append("{}: handshake identity fails".format(name))
    return SuiteResult("engines", len(graphs), tuple(failures))


def suite_escape_paths(_config: RunConfig) -> SuiteResult:
    """The escape-path search agrees with the all-simple-paths search, and
    ``v0`` of T_m has no escape path

    """
    failures = []
    cases = 0
    for name, graph in check_corpus():
        if graph.n > CHECK_CORPUS_MAX_N and not name.startswith("tm:"):
            continue
        for v in graph.vertices:
            cases += 1
            if find_escape_paths(graph, v) != \
                    escape_paths_brute_force(graph, v):
                failures.append("{}: escape paths from {} differ".format(
                    name, v))
    for m in (2, 3, 4):
        cases += 1
        if find_escape_paths(families.gen_tm(m), 0):
            failures.append("tm:{}: v0 has an escape path".format(m))
    return SuiteResult("escape-paths", cases, tuple(failures))


SUITES = (suite_counterexample, suite_caterpillars, suite_sunlets,
          suite_spiders, suite_lobsters, suite_flip, suite_engines,
          suite_escape_paths)


def run_check(config: RunConfig, out: TextIO) -> int:
    """Run every suite in :py:const:`SUITES` and write a summary

    """
    results = []
    for suite in SUITES:
        result = suite(config)
        logger.info("Suite %s: %d cases, %d failures", result.name,
                    result.cases, len(result.failures))
        for failure in result.failures:
            logger.error("%s: %s", result.name, failure)
        results.append(result)
    if config.fmt == "json":
        _write_json(out, {"suites": [r.to_dict() for r in results]})
    else:
        _write_csv(out, ["suite", "cases", "failures"],
                   ([r.name, r.cases, len(r.failures)] for r in results))
    failed = any(r.failures for r in results)
    return EXIT_VIOLATION if failed else EXIT_OK


COMMAND_RUNNERS = {
    "gen": run_gen,
    "count": run_count,
    "flip": run_flip,
    "hk": run_hk,
    "check": run_check,
}


def run(argv: Sequence[str], out: Optional[TextIO] = None) -> int:
    """Run one command

    Args:
        argv: Arguments without the program name
        out: Where to write the output; stdout by default

    Returns: The exit code

    """
    out = sys.stdout if out is None else out
    try:
        config = parse_config(argv)
    except UsageError as error:
        sys.stderr.write("hkstars: {}\n".format(error))
        return EXIT_USAGE
    configure_logging(config.verbosity)
    try:
        return COMMAND_RUNNERS[config.command](config, out)
    except (TheoremViolationError, EngineMismatchError,
            CounterexampleFoundError) as error:
        logger.error("%s", error)
        return EXIT_VIOLATION
    except (HkStarsError, OSError) as error:
        logger.error("%s", error)
        return EXIT_USAGE


def main() -> None:
    """Entry point for ``python -m hkstars``

    """
    sys.exit(run(sys.argv[1:]))
