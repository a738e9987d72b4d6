"""Exception types shared across the package."""


class PrimeGBError(Exception):
    """Base class for all library errors."""


class CapacityError(PrimeGBError):
    """A fixed-width numeric representation ran out of bits."""


class CoefficientOverflow(CapacityError):
    """Checked 64-bit coefficient arithmetic left the signed range."""


class ImageOverflow(CapacityError):
    """A power-product image does not fit in an unsigned 64-bit integer."""


class NotDivisible(PrimeGBError):
    """Power-product division requested for a non-divisor."""


class ZeroPolynomial(PrimeGBError):
    """Leading-term access on the zero polynomial."""


class InputError(PrimeGBError):
    """Problem with a user-supplied system, file or flag."""


class ParseError(InputError):
    """Text did not match the polynomial-system grammar."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class UnknownVariable(ParseError):
    """A variable letter not declared in the system's variable order."""


class UnknownSystem(InputError):
    """Requested corpus system name does not exist."""


class InvalidPermutation(InputError):
    """Variable permutation is not a bijection on the declared variables."""


class VerificationError(PrimeGBError):
    """A computed basis failed an independent correctness check."""


class EngineTimeout(PrimeGBError):
    """Computation exceeded its deadline."""
