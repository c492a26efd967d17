"""Exception hierarchy.  Every error raised on purpose derives from ``TeichError``."""

from __future__ import annotations


class TeichError(Exception):
    """Base class for deliberate failures."""


class UndefinedResultantError(TeichError, ValueError):
    pass


class NotInvertibleError(TeichError, ArithmeticError):
    """Raised by ``invmod``; ``.gcd`` holds the obstructing common factor."""

    def __init__(self, gcd, message: str = "not invertible modulo f") -> None:
        super().__init__(f"{message} (gcd = {gcd})")
        self.gcd = gcd


class NoSolutionError(TeichError, ValueError):
    pass


class ChartUndefinedError(TeichError, ValueError):
    pass


class SingularModelError(TeichError, ValueError):
    pass


class NotProjectivePointError(TeichError, ValueError):
    pass


class SpinUndefinedError(TeichError, ValueError):
    pass


class DegenerateFamilyError(TeichError, ValueError):
    pass


class InvalidDiscriminantError(TeichError, ValueError):
    pass


class SingularCurveError(TeichError, ValueError):
    pass


class DataFormatError(TeichError, ValueError):
    """Malformed data file; ``location`` names the file and term where known."""

    def __init__(self, message: str, location: str | None = None) -> None:
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


class FieldMismatchError(TeichError, TypeError):
    pass
