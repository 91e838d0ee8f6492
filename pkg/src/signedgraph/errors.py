"""Exception types shared across the package."""


class SignedGraphError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(SignedGraphError, ValueError):
    """A value (graph, cycle, signature, ...) violates an operation's precondition."""


class InvalidParametersError(SignedGraphError, ValueError):
    """Scalar parameters (n, k, m, length, ...) violate a constructor's constraints."""


class ParseError(SignedGraphError, ValueError):
    """Malformed signed-graph text.

    ``line`` is the 1-based line number of the offending input line.
    """

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ResourceLimitError(SignedGraphError, RuntimeError):
    """An explicit enumeration budget was exceeded.

    Exact solvers never degrade to approximations; they raise this instead.
    ``explored`` counts the states examined before giving up, ``lower_bound``
    (when not None) is a proven lower bound on the optimum, and ``completed``
    (when not None) counts fully processed enumeration units (e.g. switching
    classes).
    """

    def __init__(self, message: str, *, explored: int = 0,
                 lower_bound: int | None = None, completed: int | None = None):
        super().__init__(message)
        self.explored = explored
        self.lower_bound = lower_bound
        self.completed = completed
