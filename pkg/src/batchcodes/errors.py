"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "BatchCodeError",
    "DimensionError",
    "CapacityError",
    "MatrixParseError",
    "RankDeficiencyError",
    "InvalidTargetError",
    "InvalidQueryError",
    "NotSystematicError",
    "NotApplicableError",
    "InsufficientDataError",
]


class BatchCodeError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(BatchCodeError):
    """Operands have incompatible lengths or shapes."""


class CapacityError(BatchCodeError):
    """Input exceeds a configured exhaustive-computation guard."""


class MatrixParseError(BatchCodeError):
    """Matrix text is malformed; carries the offending position."""

    def __init__(self, message: str, line: int, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}"
        if column is not None:
            where += f", column {column}"
        super().__init__(f"{where}: {message}")


class RankDeficiencyError(BatchCodeError):
    """Generator matrix rows are linearly dependent."""


class InvalidTargetError(BatchCodeError):
    """Recovery target is zero or otherwise unusable."""


class InvalidQueryError(BatchCodeError):
    """Query is empty, malformed, or indexes a nonexistent symbol."""


class NotSystematicError(BatchCodeError):
    """Operation requires a code with an embedded identity."""


class NotApplicableError(BatchCodeError):
    """Bound preconditions fail for the given parameters."""


class InsufficientDataError(BatchCodeError):
    """A required table entry is missing; carries the missing key."""

    def __init__(self, message: str, missing: tuple[int, int]):
        self.missing = missing
        super().__init__(message)
