# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.

"""Read and write graphs in the edge-list text format

The format is line based. Comments start with ``#`` and run to the end of the
line; blank lines are ignored. The first remaining line is ``n <count>``,
every later one is a 0-based edge ``u v``::

    # the path P_3
    n 3
    0 1
    1 2

The canonical form written by :py:func:`format_edge_list` has no comments,
writes each edge with its smaller endpoint first, and sorts the edges, so
``format_edge_list(parse_edge_list(text)) == text`` for canonical ``text``.

"""

from typing import Iterable, List, TextIO, Tuple
from hkstars.base_utils import strip_comment
from hkstars.exceptions import GraphFormatError
from hkstars.graph import Graph, build_graph

HEADER_KEYWORD = "n"


def parse_edge_list(text: str, source: str = "<string>") -> Graph:
    """Parse edge-list text into a :py:class:`Graph`

    >>> parse_edge_list("n 3\\n0 1\\n# comment\\n2 1\\n").edges
    ((0, 1), (1, 2))

    Args:
        text: The whole text
        source: Name used in error messages

    Returns: The graph

    Raises:
        GraphFormatError: When a line is malformed or the header is missing
        GraphError: When the edges do not form a simple graph

    """
    return parse_lines(text.splitlines(), source)


def parse_lines(lines: Iterable[str], source: str) -> Graph:
    """Parse the lines of an edge list

    Args:
        lines: Lines of the text, with or without trailing newlines
        source: Name used in error messages

    Returns: The graph

    """
    n = None
    edges = []  # type: List[Tuple[int, int]]
    for line_no, raw in enumerate(lines, start=1):
        raw = raw.rstrip("\n")
        line = strip_comment(raw)
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != HEADER_KEYWORD or \
                    not fields[1].isdecimal():
                raise GraphFormatError.from_line(
                    source, line_no, raw,
                    "expected header '{} <count>'".format(HEADER_KEYWORD))
            n = int(fields[1])
            continue
        if len(fields) != 2 or not all(f.isdecimal() for f in fields):
            raise GraphFormatError.from_line(
                source, line_no, raw, "expected two vertex ids 'u v'")
        edges.append((int(fields[0]), int(fields[1])))
    if n is None:
        raise GraphFormatError("No '{} <count>' header found in '{}'".format(
            HEADER_KEYWORD, source))
    return build_graph(n, edges)


def read_edge_list(graph_file: TextIO) -> Graph:
    """Read a graph from an open edge-list file

    Args:
        graph_file: File object open for reading, at the start of the file

    Returns: The graph

    Raises:
        GraphFormatError: Also when the file is not valid text in its
            encoding

    """
    name = str(getattr(graph_file, "name", "<stream>"))
    try:
        return parse_lines(graph_file, name)
    except UnicodeDecodeError as error:
        raise GraphFormatError("'{}' is not a text file: {}".format(
            name, error)) from error


def format_edge_list(graph: Graph) -> str:
    """Write ``graph`` in canonical edge-list form

    >>> print(format_edge_list(build_graph(3, [(2, 1), (1, 0)])), end="")
    n 3
    0 1
    1 2

    Returns: The text, ending in a newline

    """
    lines = ["{} {}".format(HEADER_KEYWORD, graph.n)]
    lines.extend("{} {}".format(u, v) for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(graph: Graph, graph_file: TextIO) -> None:
    """Write ``graph`` in canonical form to an open file

    """
    graph_file.write(format_edge_list(graph))
