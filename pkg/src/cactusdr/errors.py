"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class CactusError(Exception):
    """Base class for all errors raised by cactusdr."""


# exact arithmetic
class MatrixShapeError(CactusError, ValueError):
    """Operation requires a different matrix shape (e.g. square)."""


class SingularMatrixError(CactusError, ArithmeticError):
    """Linear system has no unique solution."""


# graphs
class GraphError(CactusError, ValueError):
    """Invalid graph structure."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class NegativeIndexError(GraphError):
    pass


class VertexIndexError(GraphError, IndexError):
    """Vertex index outside 0..n-1."""


class DisconnectedGraphError(GraphError):
    pass


class NotACactusError(GraphError):
    def __init__(self, message: str, block=None):
        super().__init__(message)
        self.block = block


class UnsupportedSizeError(CactusError, ValueError):
    """Graph too large for the requested operation."""


# parsing
class ParseError(CactusError, ValueError):
    pass


class Graph6HeaderError(ParseError):
    pass


class Graph6LengthError(ParseError):
    pass


class Graph6CharacterError(ParseError):
    pass


class EdgeListSyntaxError(ParseError):
    pass


# invariants / families
class NotACutVertexError(GraphError):
    pass


class PartitionError(GraphError):
    pass


class InfeasibleParametersError(CactusError, ValueError):
    pass


class NoPendantEdgesError(GraphError):
    """sigma-transform vertex has no pendant neighbours to move."""


class NonPendantNeighborError(GraphError):
    """sigma-transform vertex lacks a unique non-pendant neighbour."""


class DefinitionDomainError(CactusError, ValueError):
    """Notion is only defined on a restricted parameter range."""


class NotAnEndCycleError(GraphError):
    pass


class CycleTooShortError(GraphError):
    pass


class UnknownSuiteError(CactusError, KeyError):
    pass
