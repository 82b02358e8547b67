"""Exception hierarchy shared by the solver and its frontend."""

from typing import Optional


class CalcError(Exception):
    """Base class for all errors raised by the solver packages."""


class UsageError(CalcError, ValueError):
    """A precondition of a library operation was violated."""


class ParseError(CalcError):
    """Malformed input text, annotated with the position it was found at."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(self.render())

    def render(self) -> str:
        if self.line is None:
            return self.message
        return f"{self.line}:{self.column}: {self.message}"


class UnsupportedError(ParseError):
    """Valid SMT-LIB that lies outside the supported conjunctive slice."""


class SoundnessError(CalcError):
    """An internal cross-check failed: unverified model or disagreeing verdicts."""
