"""Exception types raised across the package.

The CLI maps each family to a distinct exit status, so library code raises
the most specific class available.
"""


class XDError(Exception):
    """Base class for all package errors."""


class DimensionError(XDError, ValueError):
    """A dimension argument is not a positive integer."""


class ShapeError(XDError, ValueError):
    """Operand shapes do not conform."""


class DimensionOverflowError(XDError, OverflowError):
    """Dimension arithmetic left the signed 64-bit range."""


class DegenerateError(XDError, ValueError):
    """A zero-norm vector or zero column where a nonzero one is required."""


class CapacityError(XDError):
    """An exhaustive search was asked for more than it is allowed to enumerate."""


class ParseError(XDError, ValueError):
    """An input file could not be parsed."""
