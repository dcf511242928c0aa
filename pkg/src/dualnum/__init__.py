"""Dual numbers, generalized complex numbers and forward-mode differentiation."""

from .autodiff import derivative, fd_central, value_and_derivative
from .dual import EPS, Dual, Mat2, TrigForm, from_parts, from_real
from .errors import (
    ClassMismatchError,
    DomainError,
    DualNumError,
    EvaluationError,
    InvalidArgumentError,
    ParseError,
)
from .gc_core import GcNumber, UnitClass, classify

__all__ = [
    "Dual", "EPS", "Mat2", "TrigForm", "from_parts", "from_real",
    "GcNumber", "UnitClass", "classify",
    "derivative", "value_and_derivative", "fd_central",
    "DualNumError", "DomainError", "InvalidArgumentError", "ClassMismatchError",
    "ParseError", "EvaluationError",
]

__version__ = "0.1.0"
