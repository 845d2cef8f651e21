"""Exception types shared across the package."""

from __future__ import annotations


class HammockError(Exception):
    """Base class for every error this package raises deliberately."""


class SpecParseError(HammockError):
    """Lexical or semantic error in a spec file, with a 1-based position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.reason = message
        self.line = line
        self.column = column


class ValidationError(HammockError):
    """A finite law check failed.

    `code` names the violated law and `witness` carries the offending
    identifiers in a fixed order, so callers (and tests) can match on the
    exact failure instead of parsing messages.
    """

    def __init__(self, code: str, witness: tuple = (), message: str | None = None):
        self.code = code
        self.witness = tuple(witness)
        super().__init__(message or f"{code}: witness={self.witness}")
