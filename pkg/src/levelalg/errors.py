"""Exception types shared across the package."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagreed.

    Raised by internal cross-checks; indicates a bug, never bad input.
    """
