"""Exception hierarchy for the exact-arithmetic toolkit."""


class QCongrError(Exception):
    """Base class for all package-specific errors."""


class DivisionByZeroPoly(QCongrError):
    """Polynomial division by the zero polynomial."""


class BothZero(QCongrError):
    """gcd of two zero polynomials is undefined."""


class DivisionByZero(QCongrError):
    """Division by the zero rational function."""


class PoleAtOne(QCongrError):
    """A rational function diverges at q = 1."""


class NonExactDivision(QCongrError):
    """A division that must be exact left a nonzero remainder."""


class InvalidModulus(QCongrError):
    """Modulus parameter is not of the required form."""


class DenominatorNotCoprime(QCongrError):
    """Congruence undefined: a denominator shares a factor with the modulus."""


class NotInvertible(QCongrError):
    """Element has no inverse in the quotient ring."""


class InvalidParams(QCongrError):
    """Parameters violate a hypothesis of the statement being checked."""


class DenominatorDivisible(QCongrError):
    """p-adic congruence undefined: a denominator is divisible by p."""


class BuilderUndefined(QCongrError):
    """A term builder failed inside its declared range."""
