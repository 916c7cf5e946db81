"""Exception hierarchy shared by every subpackage."""


class CharprodError(Exception):
    """Base class for all errors raised by charprod."""


class GroupTooLarge(CharprodError):
    pass


class EnumerationRequired(CharprodError):
    pass


class DegreeMismatch(CharprodError, ValueError):
    pass


class NotNormal(CharprodError):
    pass


class NotSubgroup(CharprodError):
    pass


class NotSolvable(CharprodError):
    pass


class OutOfCatalog(CharprodError):
    pass


class UnknownGroup(CharprodError, KeyError):
    pass


class NotSymplectic(CharprodError):
    """Raised with the offending basis pair in ``pair``."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NotACharacter(CharprodError):
    pass


class TableMismatch(CharprodError):
    pass


class SearchFailed(CharprodError):
    pass


class SpecError(CharprodError):
    pass
