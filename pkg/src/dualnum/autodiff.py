"""Exact first derivatives by evaluating a function at a + 1ε."""

from __future__ import annotations

from typing import Callable

from .dual import Dual

ScalarFunction = Callable[[Dual], Dual]


def _seeded(f: ScalarFunction, a) -> Dual:
    out = f(Dual(a, 1))
    if not isinstance(out, Dual):
        # constant functions may return a plain scalar
        out = Dual(out, 0)
    return out


def derivative(f: ScalarFunction, a):
    """Return f'(a), read off as the ε-coefficient of f(a + ε)."""
    return _seeded(f, a).y


def value_and_derivative(f: ScalarFunction, a):
    """Return ``(f(a), f'(a))`` from one evaluation at a + ε."""
    out = _seeded(f, a)
    return out.x, out.y


def fd_central(f: Callable[[float], float], a, h=1e-6):
    """Central difference (f(a+h) - f(a-h)) / 2h; a validation oracle only."""
    if not h > 0:
        raise ValueError(f"step must be positive, got {h!r}")
    return (f(a + h) - f(a - h)) / (2 * h)
