"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class NecklaceError(Exception):
    """Base class for every error raised by this package."""


class QuiverParseError(NecklaceError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ComposabilityError(NecklaceError):
    """A sequence of arrows does not form a (cyclic) path."""

    def __init__(self, message: str, index: int):
        self.index = index
        super().__init__(f"{message} (at index {index})")


class DomainError(NecklaceError):
    """An arrow, vertex or element does not belong to the quiver at hand."""


class DivisibilityError(NecklaceError):
    """An h-polynomial is not divisible by h."""


class IntegralityError(NecklaceError):
    """An h-polynomial carries a half-integer or negative exponent."""

    def __init__(self, message: str, term: tuple[int, object]):
        self.term = term
        super().__init__(message)


class DimensionError(NecklaceError):
    """Operators built over different dimension vectors were combined."""


class ExpressionError(NecklaceError):
    """Syntax error in an expression string."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")
