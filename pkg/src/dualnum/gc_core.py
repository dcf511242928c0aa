"""Generalized complex numbers a + u*b with a unit squaring to -1, 0 or +1.

The three canonical units give ordinary (elliptic) complex numbers, dual
(parabolic) numbers and split-complex (hyperbolic) numbers. Values of
different classes never mix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from numbers import Real

from .errors import ClassMismatchError, InvalidArgumentError


class UnitClass(enum.IntEnum):
    """Class tag; the integer value is the square of the unit."""

    ELLIPTIC = -1
    PARABOLIC = 0
    HYPERBOLIC = 1

    @property
    def delta(self) -> int:
        return int(self)

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]


_SYMBOLS = {UnitClass.ELLIPTIC: "i", UnitClass.PARABOLIC: "ε", UnitClass.HYPERBOLIC: "j"}


def classify(discriminant_sign: int) -> UnitClass:
    """Map the sign of the quadratic's discriminant to a number class."""
    if isinstance(discriminant_sign, bool) or discriminant_sign not in (-1, 0, 1):
        raise InvalidArgumentError(
            f"discriminant sign must be -1, 0 or +1, got {discriminant_sign!r}"
        )
    return UnitClass(int(discriminant_sign))


@dataclass(frozen=True)
class GcNumber:
    re: Real
    im: Real
    unit: UnitClass

    def __post_init__(self):
        object.__setattr__(self, "unit", UnitClass(self.unit))

    def __add__(self, other):
        if not isinstance(other, GcNumber):
            return NotImplemented
        return gc_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, GcNumber):
            return NotImplemented
        return gc_sub(self, other)

    def __mul__(self, other):
        if not isinstance(other, GcNumber):
            return NotImplemented
        return gc_mul(self, other)

    def __neg__(self):
        return GcNumber(-self.re, -self.im, self.unit)

    def __str__(self) -> str:
        sign = "-" if self.im < 0 else "+"
        return f"{self.re} {sign} {abs(self.im)}{self.unit.symbol}"


def _check_same(u: GcNumber, v: GcNumber) -> UnitClass:
    if u.unit is not v.unit:
        raise ClassMismatchError(
            f"cannot combine {u.unit.name.lower()} and {v.unit.name.lower()} numbers"
        )
    return u.unit


def gc_add(u: GcNumber, v: GcNumber) -> GcNumber:
    unit = _check_same(u, v)
    return GcNumber(u.re + v.re, u.im + v.im, unit)


def gc_sub(u: GcNumber, v: GcNumber) -> GcNumber:
    unit = _check_same(u, v)
    return GcNumber(u.re - v.re, u.im - v.im, unit)


def gc_mul(u: GcNumber, v: GcNumber) -> GcNumber:
    """(a1 + u b1)(a2 + u b2) = (a1 a2 + delta b1 b2) + u (a1 b2 + b1 a2)."""
    unit = _check_same(u, v)
    re = u.re * v.re
    if unit.delta:
        # skipped for delta = 0 so parabolic products match Dual.__mul__ bit for bit
        re = re + unit.delta * (u.im * v.im)
    return GcNumber(re, u.re * v.im + u.im * v.re, unit)


def gc_conj(z: GcNumber) -> GcNumber:
    return GcNumber(z.re, -z.im, z.unit)


def gc_qnorm(z: GcNumber):
    """Quadratic norm z * conj(z) = re^2 - delta * im^2."""
    q = z.re * z.re
    if z.unit.delta:
        q = q + z.unit.delta * (z.im * -z.im)
    return q
