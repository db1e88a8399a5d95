"""Exception types raised across the package."""


class SpinCongError(Exception):
    pass


class OrderMismatch(SpinCongError, ValueError):
    """Two series of different truncation orders were combined."""


class InvalidInverse(SpinCongError, ValueError):
    """Series has a constant term that is not a unit in the integers."""


class InvalidPrime(SpinCongError, ValueError):
    pass


class InvalidAbacus(SpinCongError, ValueError):
    pass


class WrongResidueClass(SpinCongError, ValueError):
    pass


class IllFormedSpecialization(SpinCongError, ValueError):
    pass


class UnsupportedSpecialization(SpinCongError, ValueError):
    pass


class TruncationOrderError(SpinCongError, ValueError):
    """A computation needs more coefficients than the series carries."""
