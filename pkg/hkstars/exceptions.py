# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.

"""Custom exceptions

Every error raised on purpose by :py:mod:`hkstars` derives from
:py:class:`HkStarsError`. Errors caused by bad input also derive from
:py:class:`ValueError` so callers that only know the standard library can
still catch them.

"""

from typing import Iterable, Tuple


def _fmt_set(vertices: Iterable[int]) -> str:
    return "{" + ", ".join(str(v) for v in sorted(vertices)) + "}"


class HkStarsError(Exception):
    """Root of all errors raised by :py:mod:`hkstars`

    """


class GraphError(HkStarsError, ValueError):
    """Raised when a graph is invalid or has the wrong shape for an operation

    """


class SelfLoopError(GraphError):
    """Raised when an edge list contains a pair ``(v, v)``

    """

    @staticmethod
    def from_pair(pair: Tuple[int, int]) -> "SelfLoopError":
        """Create new object with message naming the offending pair

        Args:
            pair: The self-loop that was found

        Returns: The new exception

        """
        return SelfLoopError("Self-loop {} is not allowed in a simple "
                             "graph".format(pair))


class DuplicateEdgeError(GraphError):
    """Raised when an edge list names the same unordered pair twice

    """

    @staticmethod
    def from_pair(pair: Tuple[int, int]) -> "DuplicateEdgeError":
        """Create new object with message naming the offending pair

        Args:
            pair: The pair that was found a second time

        Returns: The new exception

        """
        return DuplicateEdgeError("Edge {} appears more than once".format(
            pair))


class VertexOutOfRangeError(GraphError):
    """Raised when an edge endpoint is not one of ``0..n-1``

    """

    @staticmethod
    def from_pair(pair: Tuple[int, int], n: int) -> "VertexOutOfRangeError":
        """Create new object with message naming the offending pair

        Args:
            pair: The edge with an endpoint out of range
            n: The number of vertices of the graph

        Returns: The new exception

        """
        return VertexOutOfRangeError(
            "Edge {} has an endpoint outside 0..{}".format(pair, n - 1))


class NotATreeError(GraphError):
    """Raised when an operation that requires a tree receives another graph

    """


class NotLobsterError(GraphError):
    """Raised when stripping the leaves twice does not leave a path

    """


class NotASpiderError(GraphError):
    """Raised when a graph does not have exactly one vertex of degree > 2

    """


class GraphFormatError(GraphError):
    """Raised when an edge-list text is improperly formatted.

    The message should describe the source and the line that is malformed.
    """

    @staticmethod
    def from_line(source: str, line_no: int, line: str,
                  problem: str) -> "GraphFormatError":
        """Create new object with message from parameters.

        Args:
            source: Name of file (or ``<string>``) being parsed
            line_no: 1-based number of the offending line
            line: The offending line, without its newline
            problem: What is wrong with the line

        Returns: The new exception

        """
        message = "In '{}', line {} ('{}'): {}".format(source, line_no, line,
                                                        problem)
        return GraphFormatError(message)


class FamilySpecError(HkStarsError, ValueError):
    """Raised when the parameters of a graph family are invalid

    """


class TooSmallError(FamilySpecError):
    """Raised when a family parameter is below the family's minimum

    """


class LengthMismatchError(FamilySpecError):
    """Raised when a per-vertex parameter list has the wrong length

    """


class BadAttachmentLengthError(FamilySpecError):
    """Raised when a lobster attachment is not a path of length 1 or 2

    """


class MissingSeedError(FamilySpecError):
    """Raised when a random family instance is requested without a seed

    """


class EngineNotApplicableError(HkStarsError, ValueError):
    """Raised when an engine is asked for on a graph it cannot count, such as
    the tree engine on a graph with a cycle

    """


class EngineMismatchError(HkStarsError):
    """Raised when two engines disagree on a count

    """

    @staticmethod
    def from_diff(first: str, second: str, vertex: int, k: int,
                  first_count: int, second_count: int) \
            -> "EngineMismatchError":
        """Create new object describing the first differing table entry

        Args:
            first: Name of one engine
            second: Name of the other engine
            vertex: Vertex of the differing entry (``-1`` for whole-graph
                counts)
            k: Set size of the differing entry
            first_count: Count reported by ``first``
            second_count: Count reported by ``second``

        Returns: The new exception

        """
        where = "c_{}".format(k) if vertex < 0 else \
            "entry ({}, {})".format(vertex, k)
        return EngineMismatchError(
            "Engines {} and {} disagree on {}: {} != {}".format(
                first, second, where, first_count, second_count))


class HypothesisViolationError(HkStarsError, ValueError):
    """Raised when the checked path flip gets a set outside its domain

    """


class CounterexampleFoundError(HkStarsError):
    """Raised when a flip fails to be an injection between stars

    This can only happen if the implementation is wrong, so the exception
    carries the witness set for debugging.

    Attributes:
        witness: The independent set on which the injection failed
    """

    def __init__(self, message: str, witness: Iterable[int]) -> None:
        super().__init__(message)
        self.witness = frozenset(witness)

    @classmethod
    def from_witness(cls, reason: str, witness: Iterable[int]) \
            -> "CounterexampleFoundError":
        """Create new object with message naming the witness set

        Args:
            reason: What went wrong with the image of ``witness``
            witness: The set on which the injection failed

        Returns: The new exception

        """
        witness = frozenset(witness)
        return cls("Flip injection failed on {}: {}".format(
            _fmt_set(witness), reason), witness)


class TheoremViolationError(HkStarsError):
    """Raised when a graph contradicts a proved star-center claim

    Such a violation means a counting bug, never a mathematical surprise.
    """


class UsageError(HkStarsError, ValueError):
    """Raised when command-line arguments are missing or inconsistent

    """
