"""Exception hierarchy shared by the library and the command line."""


class ParityCountError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class InputError(ParityCountError, ValueError):
    """Malformed input file or out-of-range argument."""

    exit_code = 2


class BudgetExceeded(ParityCountError):
    """An enumeration or sampling budget would be (or was) exceeded.

    Raised instead of returning a partial result.
    """

    exit_code = 3

    def __init__(self, message: str, required: int | None = None, budget: int | None = None):
        super().__init__(message)
        self.required = required
        self.budget = budget


class ConsistencyError(ParityCountError):
    """An internal identity failed, e.g. a non-integral reduction solution."""

    exit_code = 4
