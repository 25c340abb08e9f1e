"""Exception hierarchy shared by the library and the command-line tool."""

from __future__ import annotations


class SegreError(Exception):
    """Base class for every error raised by :mod:`segre_series`."""


class ZeroPolynomialError(SegreError, ValueError):
    """Degree or order requested on the zero polynomial."""


class NotDivisible(SegreError, ArithmeticError):
    """The polynomial is not divisible by ``1 - t``."""


class WindowTooShort(SegreError, ValueError):
    """A coefficient window does not certify the whole numerator."""


class ZeroSeriesError(SegreError, ValueError):
    """An operation that is undefined on the zero series received it."""


class HypothesisViolation(SegreError, ValueError):
    """Input data does not satisfy the hypotheses of a theorem-level operation.

    ``index`` names the offending list position when there is one.
    """

    def __init__(self, message: str, index: int | None = None):
        if index is not None:
            message = f"{message} (input #{index})"
        super().__init__(message)
        self.index = index


class VerificationError(SegreError):
    """A closed form disagreed with its independent cross-check."""

    def __init__(self, message: str, expected=None, actual=None):
        if expected is not None or actual is not None:
            message = f"{message}: expected {expected}, got {actual}"
        super().__init__(message)
        self.expected = expected
        self.actual = actual
