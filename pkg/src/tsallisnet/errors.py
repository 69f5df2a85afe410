"""Exception hierarchy.

Every error raised on purpose by the package derives from
:class:`TsallisNetError`, which is itself a :class:`ValueError`.
Parser errors carry the 1-based line number of the offending line.
"""

from __future__ import annotations


class TsallisNetError(ValueError):
    """Base class for all package errors."""


# graph model

class GraphError(TsallisNetError):
    pass


class SelfLoopError(GraphError):
    def __init__(self, node=None, line_number: int | None = None):
        self.node = node
        self.line_number = line_number
        where = f" at line {line_number}" if line_number is not None else ""
        super().__init__(f"self-loop on node {node!r}{where}")


class EmptyGraphError(GraphError):
    def __init__(self, message: str = "graph has no nodes"):
        super().__init__(message)


class UnknownNodeError(GraphError, LookupError):
    def __init__(self, node):
        self.node = node
        super().__init__(f"unknown node {node!r}")


# entropy

class ZeroTotalDegreeError(TsallisNetError):
    def __init__(self, message: str = "graph has no edges; degrees cannot be normalized"):
        super().__init__(message)


class DomainError(TsallisNetError):
    pass


class NegativeQZeroProbError(DomainError):
    def __init__(self, q: float):
        self.q = q
        super().__init__(f"q={q!r} < 0 is undefined for zero-probability entries")


class InvalidRangeError(TsallisNetError):
    pass


# parsing

class ParseError(TsallisNetError):
    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class MalformedLineError(ParseError):
    pass


class MissingVerticesHeaderError(ParseError):
    pass


class VertexIdOutOfRangeError(ParseError):
    pass


# generators

class InvalidParamsError(TsallisNetError):
    pass


class NonGraphicalSequenceError(InvalidParamsError):
    """Raised for degree sequences no simple graph can realize.

    ``index`` is the first 1-based Erdos-Gallai index ``k`` that fails,
    or ``None`` when the sequence is rejected before that test runs
    (odd sum or negative entries).
    """

    def __init__(self, message: str, index: int | None = None):
        self.index = index
        super().__init__(message)
