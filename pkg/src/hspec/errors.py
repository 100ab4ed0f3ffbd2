"""Exception hierarchy shared by all modules."""


class HspecError(Exception):
    """Base class for every error raised by hspec."""


class InputError(HspecError, ValueError):
    """Malformed or out-of-contract input."""


class EmptyEdge(InputError):
    pass


class VertexOutOfRange(InputError):
    pass


class DuplicateVertexInEdge(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class TypeExceedsN(InputError):
    pass


class InvalidArity(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class NonPositiveEntry(InputError):
    pass


class EdgeLargerThanRank(InputError):
    pass


class NoEdges(InputError):
    pass


class TooLarge(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotConverged(HspecError):
    """An iterative method ran out of iterations.

    ``diagnostics`` carries whatever the method knew when it stopped
    (iteration count, last bracket, partial results).
    """

    def __init__(self, message, **diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics
