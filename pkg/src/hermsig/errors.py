"""Exception hierarchy shared by every module in the package."""


class HermsigError(Exception):
    """Base class for all errors raised by hermsig."""


class ParameterOutOfRange(HermsigError, ValueError):
    pass


class DimensionMismatch(HermsigError, ValueError):
    pass


class ZeroRoot(HermsigError, ValueError):
    pass


class DegenerateBasis(HermsigError, ValueError):
    pass


class SingularSystem(HermsigError, ArithmeticError):
    """A linear system that should be uniquely solvable was not."""


class ConstraintViolation(HermsigError, ValueError):
    """A point was expected to lie in the real Cartan subspace but does not."""


class BadGeneratorIndex(HermsigError, IndexError):
    pass


class OrbitLimitExceeded(HermsigError, RuntimeError):
    pass


class InvalidParabolicSubset(HermsigError, ValueError):
    pass


class NotTabulated(HermsigError, LookupError):
    """No closed-form answer is recorded for this (type, parameters, R+) cell."""
