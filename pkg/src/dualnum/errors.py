"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class DualNumError(Exception):
    """Base class for all errors raised by dualnum."""


class DomainError(DualNumError, ValueError):
    """An operation was applied outside the set where it is defined.

    ``value`` is the offending operand, ``constraint`` a short human-readable
    statement of the violated condition. ``position`` is filled in by the
    expression evaluator with the character offset of the failing node.
    """

    def __init__(self, constraint: str, value=None, position: int | None = None):
        self.constraint = constraint
        self.value = value
        self.position = position
        super().__init__(constraint)

    def __str__(self) -> str:
        msg = self.constraint
        if self.value is not None:
            msg = f"{msg} (got {self.value})"
        return msg


class InvalidArgumentError(DualNumError, ValueError):
    pass


class ClassMismatchError(DualNumError, TypeError):
    pass


class ParseError(DualNumError, ValueError):
    """Malformed expression source; ``position`` is a character offset."""

    def __init__(self, message: str, position: int):
        self.message = message
        self.position = position
        super().__init__(f"{message} at offset {position}")


class EvaluationError(DualNumError, ValueError):
    """Evaluation of a well-formed expression failed (unbound name, dual exponent)."""

    def __init__(self, message: str, position: int | None = None):
        self.message = message
        self.position = position
        super().__init__(message if position is None else f"{message} at offset {position}")
