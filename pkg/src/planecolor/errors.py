"""Exception types shared across the package."""


class PlanecolorError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(PlanecolorError):
    """The input object is malformed (bad rotation system, bad cycle, ...)."""


class HypothesisViolation(PlanecolorError):
    """A solver was called on an instance that fails its preconditions.

    Carries the validity report so callers can show every failed condition.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class SolverPanic(PlanecolorError):
    """An internal invariant broke mid-recursion.

    The theorems guarantee the recursion always succeeds, so this is a bug,
    never a result.  The message embeds a replayable dump of the offending
    sub-instance in the exchange file format.
    """

    def __init__(self, message, dump=None):
        if dump:
            message = message + "\n--- instance dump ---\n" + dump
        super().__init__(message)
        self.dump = dump


class FormatError(PlanecolorError):
    """Bad instance file: parse or semantic error, with line info when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


class LimitExceeded(PlanecolorError):
    """A guarded enumeration (choosability) was asked to exceed its limits."""


class InfeasibleSpec(PlanecolorError):
    """A generator spec asks for something the family cannot realize."""
