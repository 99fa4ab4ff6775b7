"""Exception hierarchy shared by every coxrigid module."""


class CoxeterError(Exception):
    """Base class for all errors raised by this package."""

    #: short machine-readable tag used by the CLI porcelain output
    kind = "error"


class DiagramParseError(CoxeterError, ValueError):
    kind = "parse"

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownVertexError(CoxeterError, KeyError):
    kind = "unknown-vertex"

    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return f"unknown vertex {self.vertex!r}"


class SubsetSearchTooLarge(CoxeterError):
    """Raised when exhaustive subset enumeration is asked of too many vertices."""

    kind = "too-large"


class BudgetExceeded(CoxeterError):
    """A braid closure grew past its word budget."""

    kind = "budget"


class CapExceeded(CoxeterError):
    """An enumeration found more elements than its cap allows."""

    kind = "cap"


class NotSphericalError(CoxeterError, ValueError):
    kind = "not-spherical"


class TwistNotApplicable(CoxeterError, ValueError):
    kind = "twist-not-applicable"


class MapError(CoxeterError, ValueError):
    kind = "bad-map"


# The following only fire when a brute-force check contradicts a theorem on a
# conforming input, i.e. they flag a bug in this package.

class NoCorrespondent(CoxeterError):
    kind = "no-correspondent"


class NotUnique(CoxeterError):
    kind = "not-unique"


class NoValidPsi(CoxeterError):
    kind = "no-valid-psi"
