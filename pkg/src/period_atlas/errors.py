"""Exception hierarchy shared by every module."""


class PeriodAtlasError(Exception):
    pass


class NotCoprime(PeriodAtlasError, ValueError):
    pass


class MalformedData(PeriodAtlasError, ValueError):
    pass


class NotRealizable(PeriodAtlasError, ValueError):
    """Raised when an operation needs realizable data and got something else."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotClosed(PeriodAtlasError, ValueError):
    pass


class NotLiftable(PeriodAtlasError, ValueError):
    pass


class EvenExponent(PeriodAtlasError, ValueError):
    pass


class PreconditionError(PeriodAtlasError, ValueError):
    pass


class ValidatorMismatch(PeriodAtlasError, AssertionError):
    """Two independent computations of the same quantity disagree (a bug, not bad input)."""


class TableMismatch(PeriodAtlasError):
    def __init__(self, message, record=None):
        super().__init__(message)
        self.record = record


class BudgetExceeded(PeriodAtlasError, RuntimeError):
    pass
