"""Exception hierarchy.

Every library error derives from Error so the CLI can map failures to
exit codes (parse problems -> 2, domain failures -> 1).
"""


class Error(Exception):
    pass


class ParseError(Error, ValueError):
    pass


class RingMismatch(Error, ValueError):
    pass


class DivisionByZero(Error, ZeroDivisionError):
    pass


class ZeroArgument(Error, ValueError):
    pass


class ZeroModulus(Error, ValueError):
    pass


class ExactDivisionError(Error, ArithmeticError):
    """Division that was required to be exact left a remainder."""


class FactorizationIncomplete(Error, ArithmeticError):
    """A polynomial factor of degree >= 3 with no rational root survived."""


class UnsupportedRing(Error, ValueError):
    pass


class SizeMismatch(Error, ValueError):
    pass


class ShapeMismatch(Error, ValueError):
    pass


class IndexOutOfRange(Error, IndexError):
    pass


class BadIndexSet(Error, ValueError):
    pass


class EmptyResult(Error, ValueError):
    pass


class NotSquare(Error, ValueError):
    pass


class TooLargeForOracle(Error, ValueError):
    pass


class SingularMatrix(Error, ArithmeticError):
    pass


class NotAUnit(Error, ArithmeticError):
    pass


class AllZeroColumn(Error, ValueError):
    pass


class RankTooSmall(Error, ValueError):
    pass


class NonLinearElementaryDivisor(Error, ArithmeticError):
    pass


class NotMonic(Error, ValueError):
    pass
