"""Exception types shared across the package."""


class AnnihilatorError(Exception):
    pass


class NonPrimeModulus(AnnihilatorError, ValueError):
    pass


class FieldMismatch(AnnihilatorError, ValueError):
    pass


class DivisionByZero(AnnihilatorError, ZeroDivisionError):
    pass


class ZeroForm(AnnihilatorError, ValueError):
    """An operation that needs a leading term was handed the zero polynomial."""


class ZeroResult(AnnihilatorError, ArithmeticError):
    pass


class IndexOutOfRange(AnnihilatorError, IndexError):
    pass


class AllZeroSequence(AnnihilatorError, ValueError):
    pass


class InvariantViolation(AnnihilatorError, AssertionError):
    pass


class SearchSpaceTooLarge(AnnihilatorError, ValueError):
    pass


class InfiniteStaircase(AnnihilatorError, ValueError):
    pass
