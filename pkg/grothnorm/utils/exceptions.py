"""Exceptions raised by grothnorm.

Every error derives from a builtin so callers can keep catching ``ValueError``
or ``TypeError`` the usual way.
"""

__all__ = ["GrothnormError",
           "FieldMismatchError",
           "ConePreconditionError",
           "SymmetryError",
           "GrothmatParseError",
           "SizeLimitError",
           "DomainError",
           "NumericalError"]


class GrothnormError(Exception):
    pass


class FieldMismatchError(GrothnormError, TypeError):
    pass


class ConePreconditionError(GrothnormError, ValueError):
    pass


class SymmetryError(GrothnormError, ValueError):
    pass


class GrothmatParseError(GrothnormError, ValueError):
    """A grothmat file could not be parsed.

    Parameters
    ----------
    message : str
    lineno : int
        1-based line of the offending token (0 when the file ended early)

    """

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


class SizeLimitError(GrothnormError, ValueError):
    pass


class DomainError(GrothnormError, ValueError):
    pass


class NumericalError(GrothnormError, ArithmeticError):
    pass
