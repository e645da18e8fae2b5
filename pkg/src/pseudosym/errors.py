"""Exception types raised across the package."""

INT64_MAX = 2**63 - 1


class ArithmeticOverflow(OverflowError):
    """An intermediate value left the signed 64-bit range."""


class InvalidParameters(ValueError):
    """Parameters violate the admissible range of the construction."""


class NonBinomialEscape(ArithmeticError):
    """A reduction produced something other than a +-1 binomial or zero."""


class MonotonicityViolation(ArithmeticError):
    """The s-parameter sequence decreased."""


class LeadingFormMismatch(AssertionError):
    """A computed leading monomial disagrees with its closed formula."""


class NotDivisible(ArithmeticError):
    """Exact division by (1 - t) left a nonzero remainder."""

    def __init__(self, step, remainder):
        super().__init__(f"division step {step}: remainder {remainder}")
        self.step = step
        self.remainder = remainder


class InternalLimit(RuntimeError):
    """Recursion cap exceeded."""


class ConsistencyFailure(ArithmeticError):
    """Two independent computations of the same object disagree."""


def checked(value):
    """Return ``value`` unchanged, raising if it does not fit in int64."""
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise ArithmeticOverflow(f"{value} does not fit in 64 bits")
    return value
