"""Exception types raised across the package."""


class NilcompleteError(Exception):
    """Base class for every error raised by this package."""


class InvalidPart(NilcompleteError, ValueError):
    pass


class EmptyMultiset(NilcompleteError, ValueError):
    pass


class SumMismatch(NilcompleteError, ValueError):
    pass


class InvalidShape(NilcompleteError, ValueError):
    pass


class DimMismatch(NilcompleteError, ValueError):
    pass


class InvalidGraph(NilcompleteError, ValueError):
    pass


class InvalidPosition(NilcompleteError, KeyError):
    pass


class GraftPrecondition(NilcompleteError):
    """A graft was requested on inputs that violate its preconditions.

    ``clause`` names the failed condition, one of ``not-properly-downward``,
    ``t-not-in-domain``, ``s-not-in-domain``, ``t-not-less-than-s``,
    ``not-downward-path`` or ``m-out-of-range``.
    """

    def __init__(self, clause: str, detail: str = ""):
        self.clause = clause
        msg = clause if not detail else f"{clause}: {detail}"
        super().__init__(msg)


class NoCompletionExists(NilcompleteError):
    pass


class InvariantViolation(NilcompleteError):
    def __init__(self, which: str, k: int, detail: str = ""):
        self.which = which
        self.k = k
        msg = f"{which} failed at iteration {k}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class UnknownInvariant(NilcompleteError, KeyError):
    pass


class NotNilpotent(NilcompleteError, ValueError):
    pass


class NotCoprime(NilcompleteError, ValueError):
    pass
