"""Exception types raised across the package."""


class DyckFactorsError(ValueError):
    """Base class for all errors raised by this package."""


class EmptyWord(DyckFactorsError):
    pass


class BadCounts(DyckFactorsError):
    pass


class BadShape(DyckFactorsError):
    pass


class NoLeaves(DyckFactorsError):
    pass


class BadMarking(DyckFactorsError):
    pass


class BadProfile(DyckFactorsError):
    pass


class NotRealRooted(DyckFactorsError):
    pass


class NotSymmetric(DyckFactorsError):
    pass


class OrderMismatch(DyckFactorsError):
    pass


class DecompositionBug(AssertionError):
    """An internal invariant of the symmetric decomposition was violated."""


class InexactDivision(AssertionError):
    """A closed-form count produced a non-integral quotient."""
