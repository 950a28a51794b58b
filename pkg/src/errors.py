"""Exception hierarchy shared by every package."""
from typing import Optional


class BraidedGroupsError(Exception):
    """Base class for all library errors."""


class ConfigError(BraidedGroupsError, ValueError):
    """Invalid flag or session setting."""


class ParseError(BraidedGroupsError):
    """Syntax error in a scalar, polynomial or presentation file."""

    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = ""):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(str(self))

    def __str__(self) -> str:
        where = f"{self.source}:" if self.source else ""
        if self.line:
            where += f"{self.line}:{self.column}: "
        elif self.column:
            where += f"column {self.column}: "
        return f"{where}{self.message}"


class DivisionByZero(BraidedGroupsError, ZeroDivisionError):
    """Division by the zero scalar."""


class MixedContext(BraidedGroupsError):
    """Scalars from two different field contexts met in one operation."""


class AlphabetMismatch(BraidedGroupsError):
    """Polynomials or tensors over incompatible presentations."""


class NonTerminating(BraidedGroupsError):
    """A rewrite rule does not decrease in the monomial order."""


class OrientationMismatch(NonTerminating):
    """A rule stated with an arrow disagrees with its automatic orientation."""


class CoverageGap(BraidedGroupsError):
    """A braiding, action or table entry is not available for the requested pair."""


class UnboundedTwist(BraidedGroupsError):
    """Twisting an infinite-dimensional algebra without a degree bound."""


class BasisTooLarge(BraidedGroupsError):
    """A finite-basis computation exceeded the configured size limit."""


class NoSolution(BraidedGroupsError):
    """A linear system required to derive structure data is inconsistent."""


class InfiniteHost(BraidedGroupsError):
    """A module-variant construction was requested over an infinite-dimensional host."""


class UnknownName(BraidedGroupsError, KeyError):
    """A catalog name or generator name that does not exist."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown name"


class FieldMismatch(BraidedGroupsError):
    """A bundle was requested in a field context it cannot live in."""


class VerificationFailed(BraidedGroupsError):
    """A structure failed one of its axiom gates."""

    def __init__(self, message: str, report: Optional[object] = None):
        self.report = report
        super().__init__(message)
