"""Exception types raised by the library.

All errors derive from LowCayleyError so callers can catch the library's
failures with a single handler. StuckConstruction subclasses
NotABaseNonEdge: a stuck greedy derivation means the requested pair does
not admit a construction (or the cluster extraction disagrees with it),
so both views of the failure are catchable.
"""


class LowCayleyError(Exception):
    """Base class for all library errors."""


class ParseError(LowCayleyError):
    """Malformed graph file. Carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class NoSuchEdge(LowCayleyError):
    """Requested edge is not present in the graph."""


class HostTooLarge(LowCayleyError):
    """Host graph exceeds the brute-force minor search bound."""


class TooSmall(LowCayleyError):
    """Graph has fewer than two vertices."""


class Disconnected(LowCayleyError):
    """Operation requires a connected graph."""


class EmptyGraph(LowCayleyError):
    """Operation requires at least one edge."""


class NotABaseNonEdge(LowCayleyError):
    """The given pair is not a base non-edge of the graph."""


class StuckConstruction(NotABaseNonEdge):
    """Greedy derivation found no eligible step before covering the graph.

    Signals that the graph is not 1-dof tree-decomposable from the given
    pair, or that the extracted cluster structure does not support a
    construction. Never silently retried.
    """


class NotOneDofTreeDecomposable(LowCayleyError):
    """Graph admits no base non-edge at all."""


class IndexOutOfRange(LowCayleyError):
    """Step index outside the construction sequence."""


class ExtremeEdgeExists(LowCayleyError):
    """The extreme edge is already present; the sequence is malformed."""


class TooFewSteps(LowCayleyError):
    """Operation needs a construction with at least two steps."""


class UnknownFamily(LowCayleyError):
    """Generator family name not recognised."""


class BadSize(LowCayleyError):
    """Generator size parameter outside its documented bounds."""
