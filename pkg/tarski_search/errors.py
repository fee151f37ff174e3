"""Exceptions raised by tarski_search."""


class TarskiSearchError(Exception):
    """Base class for all errors raised by this package."""


class InvalidShapeError(TarskiSearchError, ValueError):
    """Raised for a grid with n < 1 or k < 1."""


class ShapeMismatchError(TarskiSearchError, ValueError):
    pass


class InvalidPointError(TarskiSearchError, ValueError):
    pass


class BoxOrderError(TarskiSearchError, ValueError):
    """Raised when a box is given with lo not below hi."""


class BudgetExceededError(TarskiSearchError):
    """Raised when an exhaustive operation would enumerate too many points."""

    def __init__(self, message, size=None, budget=None):
        super(BudgetExceededError, self).__init__(message)
        self.size = size
        self.budget = budget


class NotMonotoneError(TarskiSearchError, RuntimeError):
    pass


class NotFamilyResponseError(TarskiSearchError, ValueError):
    """Raised when an oracle response cannot come from any hidden-point
    function."""


class InconsistentHistoryError(TarskiSearchError, ValueError):
    pass


class InstanceFormatError(TarskiSearchError, ValueError):
    """Raised for malformed instance files.

    Args:
        message (str): what is wrong.
        field (str): JSON field at fault, if known.
        line (int): line number in the source document, if known.
    """

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append('line %d' % line)
        if field is not None:
            where.append('field %r' % field)
        if where:
            message = '%s (%s)' % (message, ', '.join(where))
        super(InstanceFormatError, self).__init__(message)


class UsageError(TarskiSearchError, ValueError):
    """Raised for command-line configurations that cannot be run."""
