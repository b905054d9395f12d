"""Exception hierarchy shared by all modules."""


class WonderfulError(ValueError):
    """Base class for every error raised by this package."""


class InadmissibleRank(WonderfulError):
    pass


class UnknownFamily(WonderfulError):
    pass


class RankMismatch(WonderfulError):
    pass


class IndexOutOfRange(WonderfulError):
    pass


class GroupTooLarge(WonderfulError):
    pass


class NotDominant(WonderfulError):
    pass


class NotIndivisible(WonderfulError):
    pass


class NoShortRoot(WonderfulError):
    pass


class EmptyProduct(WonderfulError):
    pass


class NotAmple(WonderfulError):
    pass


class UnknownTable(WonderfulError):
    pass


class InvariantViolation(AssertionError):
    """An identity that must hold exactly was found to fail."""
