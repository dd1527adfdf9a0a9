"""Exception hierarchy shared by every module."""


class TangleError(Exception):
    """Base class for all library errors."""


class ParseError(TangleError, ValueError):
    """Malformed graph, matroid or command-line input."""


class PreconditionError(TangleError, ValueError):
    """An operation was called outside its documented hypotheses."""


class BudgetExceeded(TangleError, RuntimeError):
    """An exhaustive search would exceed its configured work budget."""


class FalsificationError(TangleError, AssertionError):
    """A checked identity failed on a concrete instance.

    These are raised instead of silently skipping, so that a bug (or a
    counterexample) surfaces with its witness attached.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
