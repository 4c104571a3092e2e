"""Exception hierarchy shared by every module.

The CLI maps any ``SupersingularError`` to exit code 1 and prints the class
name, so each class name doubles as a stable error identifier.
"""


class SupersingularError(Exception):
    """Base class for mathematical domain errors."""


class InexactDivision(SupersingularError):
    pass


class DivisionByZero(SupersingularError, ZeroDivisionError):
    pass


class OutOfRange(SupersingularError, ValueError):
    pass


class NotCoprime(SupersingularError, ValueError):
    pass


class NotPrime(SupersingularError, ValueError):
    pass


class EvenArgument(SupersingularError, ValueError):
    pass


class BadArguments(SupersingularError, ValueError):
    pass


class LevelMismatch(SupersingularError, ValueError):
    pass


class NotDivisible(SupersingularError, ValueError):
    pass


class NotInQuadraticSubring(SupersingularError, ValueError):
    pass


class NonIntegralScaling(SupersingularError, ValueError):
    pass


class OddDegree(SupersingularError, ValueError):
    pass


class UnsupportedDegree(SupersingularError, ValueError):
    pass


class NoConvergence(SupersingularError, RuntimeError):
    pass
