"""Exception hierarchy shared by every crsparse module."""


class CrsparseError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(CrsparseError, ValueError):
    pass


class InvalidMatrix(CrsparseError, ValueError):
    pass


class ShapeError(CrsparseError, ValueError):
    pass


class NotPSD(CrsparseError, ValueError):
    pass


class DisconnectedGraph(CrsparseError, ValueError):
    pass


class DegenerateLaplacian(CrsparseError, ValueError):
    pass


class DegenerateDistribution(CrsparseError, ValueError):
    """No index has positive sampling probability."""


class AssumptionViolated(CrsparseError, ValueError):
    pass


class NoEdges(CrsparseError, ValueError):
    pass


class InvalidBoundary(CrsparseError, ValueError):
    pass


class NullQuadraticForm(CrsparseError, ValueError):
    pass


class GraphValidationError(CrsparseError, ValueError):
    pass


class ParseError(CrsparseError, ValueError):
    """Malformed edge-list input. ``lineno`` is 1-based, or None for whole-file errors."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
