"""Exception types shared across the package."""


class TuranLabError(Exception):
    """Base class for every error raised by this package."""


class InvalidVertexError(TuranLabError):
    """A vertex id falls outside the dense range 0..n-1."""


class SelfLoopError(TuranLabError):
    """An edge joins a vertex to itself."""


class InvalidPartsError(TuranLabError):
    """A partite structure was requested with a non-positive part count."""


class TooLargeError(TuranLabError):
    """The input exceeds a documented size limit of an exact algorithm."""


class ParseError(TuranLabError):
    """A serialized graph or command-line graph spec cannot be parsed."""


class NotBipartiteError(TuranLabError):
    """The graph contains an odd cycle."""


class NotForestError(TuranLabError):
    """The graph contains a cycle but an acyclic input is required."""


class NotTreeError(TuranLabError):
    """The input is not a connected acyclic graph of the required size."""


class InvalidBlowupError(TuranLabError):
    """The blow-up clique parameter is below the supported minimum."""


class OutOfDomainError(TuranLabError):
    """A formula was evaluated outside its stated numeric domain."""


class OutOfTheoremScopeError(TuranLabError):
    """The requested computation is not covered by the implemented theorems.

    The ``reason`` attribute carries a short machine-readable tag so callers
    (notably the CLI) can report why the input fell outside the covered cases.
    """

    def __init__(self, message: str, reason: str = "out_of_scope"):
        super().__init__(message)
        self.reason = reason


class AmbiguousCaseError(TuranLabError):
    """Two applicable formula rows disagree on the same input."""


class BudgetExceededError(TuranLabError):
    """A backtracking search ran out of its node budget before deciding."""
