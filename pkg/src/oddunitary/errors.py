"""Exception hierarchy for the library."""


class OddUnitaryError(Exception):
    pass


class IncompatibleInvolution(OddUnitaryError, ValueError):
    pass


class NotAUnit(OddUnitaryError, ArithmeticError):
    pass


class RingMismatch(OddUnitaryError, ValueError):
    pass


class DimensionMismatch(OddUnitaryError, ValueError):
    pass


class BadIndex(OddUnitaryError, IndexError):
    pass


class BadCoordinate(OddUnitaryError, ValueError):
    pass


class InvalidFormParameter(OddUnitaryError, ValueError):
    pass


class InternalInvariantViolation(OddUnitaryError, AssertionError):
    pass


class InvalidPhi(OddUnitaryError, ValueError):
    pass


class ConditionUnsolvable(OddUnitaryError, ValueError):
    pass


class ParseError(OddUnitaryError, ValueError):
    pass
