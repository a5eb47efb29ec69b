"""Exception hierarchy shared by every module."""

from __future__ import annotations


class QcrcError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class InvalidCodeError(QcrcError, ValueError):
    """Construction parameters violate a precondition."""


class UncorrectableError(QcrcError):
    """A syndrome lies outside the decoder's table or scan."""


class AmbiguousSyndromeError(QcrcError):
    """Two inequivalent errors share a syndrome inside a decode table.

    The two errors are kept on the exception as a constructive witness.
    """

    def __init__(self, message: str, first=None, second=None):
        super().__init__(message)
        self.first = first
        self.second = second


class InfeasibleError(QcrcError):
    """An exhaustive enumeration would exceed its configured cap."""


class QcrcWarning(UserWarning):
    """Parameters are legal but outside the regime the guarantees cover."""
