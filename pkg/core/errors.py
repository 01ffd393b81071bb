"""Exception hierarchy for graph operations."""

from typing import Dict, Optional, Tuple


class GraphError(Exception):
    """Base class for every error raised by the toolkit."""


class ParseError(GraphError, ValueError):
    """Malformed graph input.

    Attributes:
        offset: Byte offset of the offending input position
        fmt: Name of the format being parsed
    """

    def __init__(self, message: str, offset: int, fmt: str = "") -> None:
        self.offset = offset
        self.fmt = fmt
        prefix = f"{fmt}: " if fmt else ""
        super().__init__(f"{prefix}{message} (at byte {offset})")


class RotationFormatError(ParseError):
    """Malformed rotation file; `line` is 1-based."""

    def __init__(self, message: str, line: int, offset: int = 0) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}", offset, "rotation")


class SerializationError(GraphError, ValueError):
    """The graph cannot be written in the requested format."""


class EdgeNotFoundError(GraphError, KeyError):
    """An operation named an edge that is not in the graph."""

    def __init__(self, edge: Tuple[int, int]) -> None:
        self.edge = edge
        super().__init__(f"edge {edge} is not in the graph")

    def __str__(self) -> str:
        return self.args[0]


class PreconditionError(GraphError, ValueError):
    """A documented precondition of an operation does not hold."""


class UnsupportedParameterError(PreconditionError):
    """Parameter outside the supported range (e.g. k < 3 for reductions)."""


class GraphTooLargeError(GraphError):
    """An exhaustive operation was asked to run beyond its size limit."""

    def __init__(self, message: str, size: int, limit: int) -> None:
        self.size = size
        self.limit = limit
        super().__init__(f"{message} (size {size} exceeds limit {limit})")


class LiftError(GraphError):
    """A walk could not be lifted from a minor back to its host.

    Attributes:
        edge: The blocking edge or vertex, if one is known
    """

    def __init__(self, message: str, edge: Optional[Tuple[int, ...]] = None) -> None:
        self.edge = edge
        super().__init__(message)


class AttachmentError(GraphError):
    """A cut walk needs more visits at a cut vertex than allowed."""

    def __init__(self, message: str, loads: Dict[int, int]) -> None:
        self.loads = dict(loads)
        super().__init__(f"{message}; degree loads {self.loads}")


class SearchTimeout(GraphError):
    """The active time limit expired during a search."""


class InternalError(GraphError):
    """A guaranteed object was not found; indicates a bug."""
