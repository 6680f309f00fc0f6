"""Exception types raised by the toolkit.

Everything derives from FFGeomError so callers can catch the library's
failures in one clause; the CLI maps FFGeomError to exit code 2.
"""


class FFGeomError(Exception):
    """Base class for all toolkit errors."""


class NonPrimeError(FFGeomError):
    """Field characteristic is not prime."""


class ReduciblePolynomialError(FFGeomError):
    """Extension modulus is reducible over the prime subfield."""


class DegreeMismatchError(FFGeomError):
    """Modulus has the wrong degree/shape, or is not monic."""


class ZeroInverseError(FFGeomError):
    """Multiplicative inverse of zero requested."""


class FieldMismatchError(FFGeomError):
    """Operands belong to different fields."""


class DimensionMismatchError(FFGeomError):
    """Point or tuple dimension does not match the operation's requirement."""


class CoincidentPointsError(FFGeomError):
    """Two distinct points were required but the same point was given twice."""


class TooFewPointsError(FFGeomError):
    """The point set is too small for the requested operation."""


class PinNotInSetError(FFGeomError):
    """The pin point of a pinned spectrum is not a member of the set."""


class NoBaseError(FFGeomError):
    """No base pair exists (fewer than two points)."""


class InsufficientPinnedLinesError(FFGeomError):
    """The pinned winner does not carry enough working lines to refine."""


class OriginInFError(FFGeomError):
    """The second-moment bound requires 0 not to lie in F."""


class TooLargeError(FFGeomError):
    """Instance exceeds a brute-force enumeration guard."""


class ParseError(FFGeomError):
    """Malformed point-set file or field specification string."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CoordinateOutOfRangeError(ParseError):
    """A coordinate in a point-set file is not in [0, q)."""


class FieldHeaderMismatchError(FFGeomError):
    """File header names a different field than the caller requested."""
