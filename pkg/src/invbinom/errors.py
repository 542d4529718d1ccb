"""Exception taxonomy shared by every module in the package."""


class SeriesError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SeriesError):
    """Arguments outside the region where an operation is defined."""


class ArgumentError(SeriesError):
    """Structurally invalid arguments (wrong range, wrong shape)."""


class ConvergenceError(SeriesError):
    """An iteration or subdivision budget ran out before the tolerance was met."""


class PoleError(SeriesError):
    """Evaluation requested exactly at a pole."""


class BranchFailure(SeriesError):
    """A branch-cut consistency check failed; the result was not silently kept."""
