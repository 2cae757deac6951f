"""Exception types shared across the package."""

from __future__ import annotations


class CSystemError(Exception):
    """Base class for all casys errors."""


class UnknownStateError(CSystemError):
    """A state id was used that the automaton does not declare."""


class UnknownActionError(CSystemError):
    """An action was used that is not in the automaton's alphabet."""


class UnknownTerminalError(CSystemError):
    """A transition name was used that the controller does not know."""


class NotComposableError(CSystemError):
    """Two automata violate one or more composability clauses."""

    def __init__(self, reasons: tuple[str, ...]):
        self.reasons = tuple(reasons)
        super().__init__("; ".join(self.reasons))


class ControllerInvalidError(CSystemError):
    """A controlling automaton fails validation against its subject."""

    def __init__(self, violations: tuple[str, ...]):
        self.violations = tuple(violations)
        super().__init__("; ".join(self.violations))


class SubjectMismatchError(CSystemError):
    """A controller or meta-composition was paired with the wrong subject."""


class EnumerationLimitError(CSystemError):
    """A requested trace length exceeds the configured enumeration cap."""


class DocumentError(CSystemError):
    """A model document is syntactically or structurally invalid.

    ``line`` and ``column`` are set for JSON syntax errors; structural
    errors carry a key path in the message instead.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
