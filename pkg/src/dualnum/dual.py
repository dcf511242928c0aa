"""Dual numbers a + εb with ε² = 0.

Parts are real scalars of any built-in kind (int, Fraction, float, numpy
floating types). Both parts always share one kind: mixed construction
promotes to the wider of the two, so integer and rational duals stay exact
under +, -, * while floats behave as IEEE doubles.

Domain violations raise :class:`~dualnum.errors.DomainError`. Every
singularity guard is an exact zero test on the real part; values merely
close to a singularity give large finite results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Rational, Real
from typing import Callable

from .errors import DomainError, InvalidArgumentError

__all__ = [
    "Dual", "TrigForm", "Mat2", "EPS",
    "from_parts", "from_real", "real", "imag", "reim", "format_dual",
    "add", "sub", "neg", "mul", "div", "inv", "conj", "modulus", "abs2", "arg",
    "to_trig", "from_trig", "to_matrix", "from_matrix", "mat_mul",
    "eq", "eq_real", "predicate", "isreal", "isinteger", "isfinite", "isnan",
    "isinf", "iszero", "isone", "one", "zero", "promote_mixed",
    "powi", "powq", "powf", "nth_root", "sqrt", "cbrt",
    "exp", "log", "log_base",
    "sin", "cos", "tan", "cot", "asin", "acos", "atan", "acot",
    "sinh", "cosh", "tanh", "coth", "FUNCTIONS",
]


def _promote(a, b):
    if not isinstance(a, Real) or not isinstance(b, Real):
        raise TypeError(f"dual parts must be real scalars, got {type(a).__name__} and {type(b).__name__}")
    kind = type(a + b)
    if kind is bool:
        kind = int
    if type(a) is not kind:
        a = kind(a)
    if type(b) is not kind:
        b = kind(b)
    return a, b


@dataclass(frozen=True, eq=False)
class Dual:
    """Dual number ``x + y·ε``; ``x`` is the real part, ``y`` the imaginary part."""

    x: Real
    y: Real

    def __post_init__(self):
        x, y = _promote(self.x, self.y)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def real(self):
        return self.x

    @property
    def imag(self):
        return self.y

    def reim(self):
        return self.x, self.y

    def __repr__(self) -> str:
        return f"Dual({self.x!r}, {self.y!r})"

    def __str__(self) -> str:
        return format_dual(self)

    def __format__(self, spec: str) -> str:
        if not spec:
            return str(self)
        return f"{format(self.x, spec)} {'-' if self.y < 0 else '+'} {format(abs(self.y), spec)}ε"

    def __pos__(self):
        return Dual(+self.x, +self.y)

    def __neg__(self):
        return neg(self)

    def __add__(self, other):
        return promote_mixed(self, other, add)

    def __radd__(self, other):
        return promote_mixed(other, self, add)

    def __sub__(self, other):
        return promote_mixed(self, other, sub)

    def __rsub__(self, other):
        return promote_mixed(other, self, sub)

    def __mul__(self, other):
        return promote_mixed(self, other, mul)

    def __rmul__(self, other):
        return promote_mixed(other, self, mul)

    def __truediv__(self, other):
        return promote_mixed(self, other, div)

    def __rtruediv__(self, other):
        return promote_mixed(other, self, div)

    def __pow__(self, p):
        if isinstance(p, Dual):
            if p.y != 0:
                return NotImplemented
            p = p.x
        if not isinstance(p, Real):
            return NotImplemented
        return powf(self, p)

    # sign-preserving: the modulus of a dual number may be negative
    def __abs__(self):
        return modulus(self)

    def __eq__(self, other):
        if isinstance(other, Dual):
            return eq(self, other)
        if isinstance(other, Real):
            return eq_real(self, other)
        return NotImplemented

    def __hash__(self):
        if self.y == 0:
            return hash(self.x)
        return hash((self.x, self.y))

    def __bool__(self):
        return not iszero(self)


EPS = Dual(0, 1)


@dataclass(frozen=True)
class TrigForm:
    """``r(1 + φε)``: module ``r`` (may be negative) and argument ``phi``."""

    r: Real
    phi: Real


@dataclass(frozen=True)
class Mat2:
    m11: Real
    m12: Real
    m21: Real
    m22: Real


def _as_dual(z) -> Dual:
    if isinstance(z, Dual):
        return z
    if isinstance(z, Real):
        return from_real(z)
    raise TypeError(f"expected a Dual or real scalar, got {type(z).__name__}")


# construction and access

def from_parts(a, b) -> Dual:
    return Dual(a, b)


def from_real(a) -> Dual:
    return Dual(a, type(a)(0) if not isinstance(a, bool) else 0)


def real(z):
    return _as_dual(z).x


def imag(z):
    return _as_dual(z).y


def reim(z):
    z = _as_dual(z)
    return z.x, z.y


def _fmt_scalar(v, digits: int) -> str:
    if isinstance(v, Integral):
        return str(int(v))
    return format(float(v), f".{digits}g")


def format_dual(z: Dual, digits: int = 12) -> str:
    """Render as ``"a + bε"`` or ``"a - |b|ε"`` with ``digits`` significant digits."""
    z = _as_dual(z)
    sep = "-" if z.y < 0 else "+"
    return f"{_fmt_scalar(z.x, digits)} {sep} {_fmt_scalar(abs(z.y), digits)}ε"


def one(like=float) -> Dual:
    """Multiplicative identity at the scalar kind of ``like`` (a Dual, scalar or type)."""
    kind = _kind_of(like)
    return Dual(kind(1), kind(0))


def zero(like=float) -> Dual:
    kind = _kind_of(like)
    return Dual(kind(0), kind(0))


def _kind_of(like):
    if isinstance(like, Dual):
        return type(like.x)
    if isinstance(like, type):
        return int if like in (Dual, bool) else like
    return int if isinstance(like, bool) else type(like)


# arithmetic

def add(z: Dual, u: Dual) -> Dual:
    return Dual(z.x + u.x, z.y + u.y)


def sub(z: Dual, u: Dual) -> Dual:
    return Dual(z.x - u.x, z.y - u.y)


def neg(z: Dual) -> Dual:
    return Dual(-z.x, -z.y)


def mul(z: Dual, u: Dual) -> Dual:
    return Dual(z.x * u.x, z.x * u.y + z.y * u.x)


def div(z: Dual, u: Dual) -> Dual:
    if u.x == 0:
        raise DomainError("division by zero divisor: real part of the divisor is 0", u)
    # (b1 a2 - b2 a1) / a2^2 without squaring a2, which underflows for tiny divisors
    q = z.x / u.x
    return Dual(q, (z.y - u.y * q) / u.x)


def inv(z: Dual) -> Dual:
    z = _as_dual(z)
    if z.x == 0:
        raise DomainError("inverse is only defined for real(z) != 0", z)
    r = 1 / z.x
    return Dual(r, -z.y * r * r)


_BINARY_OPS = {"add": add, "sub": sub, "mul": mul, "div": div}


def promote_mixed(a, b, op: Callable[[Dual, Dual], Dual] | str):
    """Apply a binary dual operation after lifting any real operand to a dual.

    Either argument may be the real one; the lifted value has a zero
    imaginary part. Returns ``NotImplemented`` for non-numeric operands so
    the Python operator protocol can fall through.
    """
    if isinstance(op, str):
        op = _BINARY_OPS[op]
    if not isinstance(a, (Dual, Real)) or not isinstance(b, (Dual, Real)):
        return NotImplemented
    return op(_as_dual(a), _as_dual(b))


def conj(z) -> Dual:
    z = _as_dual(z)
    return Dual(z.x, -z.y)


def modulus(z):
    """Absolute value |z| = real part; unlike complex numbers it keeps its sign."""
    return _as_dual(z).x


def abs2(z):
    x = _as_dual(z).x
    return x * x


def arg(z):
    z = _as_dual(z)
    if z.x == 0:
        raise DomainError("argument is only defined for real(z) != 0", z)
    return z.y / z.x


# representations

def to_trig(z) -> TrigForm:
    z = _as_dual(z)
    if z.x == 0:
        raise DomainError("trigonometric form requires |z| = real(z) != 0", z)
    return TrigForm(z.x, z.y / z.x)


def from_trig(t: TrigForm) -> Dual:
    return Dual(t.r, t.r * t.phi)


def to_matrix(z) -> Mat2:
    z = _as_dual(z)
    return Mat2(z.x, z.y, type(z.x)(0), z.x)


def from_matrix(m: Mat2) -> Dual:
    if m.m21 != 0 or m.m11 != m.m22:
        raise InvalidArgumentError(f"matrix {m} does not embed a dual number (need m21 = 0, m11 = m22)")
    return Dual(m.m11, m.m12)


def mat_mul(a: Mat2, b: Mat2) -> Mat2:
    return Mat2(
        a.m11 * b.m11 + a.m12 * b.m21,
        a.m11 * b.m12 + a.m12 * b.m22,
        a.m21 * b.m11 + a.m22 * b.m21,
        a.m21 * b.m12 + a.m22 * b.m22,
    )


# equality and predicates

def eq(z: Dual, u: Dual) -> bool:
    return z.x == u.x and z.y == u.y


def eq_real(a, b) -> bool:
    """Dual-versus-real equality; accepts the two arguments in either order."""
    if isinstance(a, Dual) and not isinstance(b, Dual):
        z, r = a, b
    elif isinstance(b, Dual) and not isinstance(a, Dual):
        z, r = b, a
    else:
        raise TypeError("eq_real needs exactly one Dual and one real scalar")
    return isreal(z) and z.x == r


def isreal(z) -> bool:
    return _as_dual(z).y == 0


def isinteger(z) -> bool:
    z = _as_dual(z)
    if z.y != 0:
        return False
    if isinstance(z.x, Integral):
        return True
    if isinstance(z.x, Rational):
        return z.x.denominator == 1
    return math.isfinite(z.x) and float(z.x).is_integer()


def isfinite(z) -> bool:
    z = _as_dual(z)
    return math.isfinite(z.x) and math.isfinite(z.y)


def isnan(z) -> bool:
    z = _as_dual(z)
    return math.isnan(z.x) or math.isnan(z.y)


def isinf(z) -> bool:
    z = _as_dual(z)
    return math.isinf(z.x) or math.isinf(z.y)


def iszero(z) -> bool:
    z = _as_dual(z)
    return z.x == 0 and z.y == 0


def isone(z) -> bool:
    z = _as_dual(z)
    return z.x == 1 and z.y == 0


_PREDICATES = {
    "isreal": isreal, "isinteger": isinteger, "isfinite": isfinite, "isnan": isnan,
    "isinf": isinf, "iszero": iszero, "isone": isone,
}


def predicate(kind: str, z) -> bool:
    try:
        fn = _PREDICATES[kind]
    except KeyError:
        raise InvalidArgumentError(f"unknown predicate {kind!r}") from None
    return fn(z)


# powers and roots

def _real_root(x, n: int) -> float:
    """Real n-th root; odd n accepts negative x."""
    if x == 0:
        return 0.0
    ax = abs(float(x))
    r = ax ** (1.0 / n)
    try:
        # one Newton step repairs the last ulp of the pow() estimate
        r = r - (r ** n - ax) / (n * r ** (n - 1))
    except OverflowError:
        pass
    return -r if x < 0 else r


def _real_pow(x, n: int, m: int) -> float:
    """x**(n/m) over the reals; m odd when x < 0."""
    if x >= 0:
        return float(x) ** (n / m)
    mag = (-float(x)) ** (n / m)
    return -mag if n % 2 else mag


def powi(z, n: int) -> Dual:
    """Integer power: (a + εb)^n = a^n + n·b·a^(n-1)·ε."""
    z = _as_dual(z)
    n = _as_int(n)
    x, y = z.x, z.y
    if n == 0:
        return one(z)
    if n == 1:
        return z
    if n < 0 and x == 0:
        raise DomainError("negative exponentiation is only defined for real(z) != 0", z)
    return Dual(x ** n, n * y * x ** (n - 1))


def _as_int(n) -> int:
    if isinstance(n, bool) or not isinstance(n, Integral):
        raise InvalidArgumentError(f"integer exponent required, got {n!r}")
    return int(n)


def powq(z, q) -> Dual:
    """Rational power z^(n/m), with n/m in lowest terms.

    Odd ``m`` admits a negative real part; even ``m`` requires real(z) >= 0.
    At real(z) = 0 the derivative factor a^(q-1) is singular for q < 1,
    which is an error; for q > 1 the result is 0.
    """
    z = _as_dual(z)
    if isinstance(q, tuple):
        q = Fraction(*q)
    elif not isinstance(q, Rational):
        raise InvalidArgumentError(f"rational exponent required, got {q!r}")
    q = Fraction(q)
    n, m = q.numerator, q.denominator
    if n == 0:
        return one(z)
    if m == 1:
        return powi(z, n)
    x, y = z.x, z.y
    if m % 2 == 0 and x < 0:
        raise DomainError("even radical for dual number z is only defined for real(z) >= 0", z)
    if x == 0 and q < 1:
        raise DomainError(f"z^{q} is singular at real(z) = 0", z)
    return Dual(_real_pow(x, n, m), (n / m) * y * _real_pow(x, n - m, m))


def powf(z, p) -> Dual:
    """Real power with a delegation ladder.

    Integral ``p`` goes to :func:`powi`; a float that is the nearest double
    to a rational with denominator <= 64 goes to :func:`powq` (so ``x^(1/3)``
    works for negative x); anything else needs real(z) > 0.
    """
    z = _as_dual(z)
    if isinstance(p, Dual):
        if p.y != 0:
            raise InvalidArgumentError("dual-valued exponents are not supported")
        p = p.x
    if isinstance(p, Integral):
        return powi(z, int(p))
    if isinstance(p, Rational):
        return powq(z, p)
    p = float(p)
    if math.isfinite(p):
        if p.is_integer():
            return powi(z, int(p))
        q = Fraction(p).limit_denominator(64)
        if float(q) == p:
            return powq(z, q)
    x, y = z.x, z.y
    if not x > 0:
        raise DomainError(f"z^{p} is only defined for real(z) > 0", z)
    return Dual(x ** p, p * y * x ** (p - 1))


def nth_root(z, n: int) -> Dual:
    """n-th root: ⁿ√a + ε·b·ⁿ√a/(n·a). Odd n accepts negative a; a = 0 is singular."""
    z = _as_dual(z)
    n = _as_int(n)
    if n < 1:
        raise InvalidArgumentError(f"root order must be a positive integer, got {n}")
    if n == 1:
        return z
    x, y = z.x, z.y
    if n % 2 == 0 and x < 0:
        raise DomainError(f"even root of order {n} is only defined for real(z) >= 0", z)
    if x == 0:
        raise DomainError("root derivative is singular at real(z) = 0", z)
    r = _real_root(x, n)
    return Dual(r, y * r / (n * x))


def sqrt(z) -> Dual:
    z = _as_dual(z)
    x, y = z.x, z.y
    if x < 0:
        raise DomainError("sqrt for dual number z is only defined for real(z) >= 0", z)
    if x == 0:
        if y == 0:
            return Dual(0.0, 0.0)
        raise DomainError("sqrt derivative is singular at real(z) = 0", z)
    s = math.sqrt(x)
    return Dual(s, y / (2 * s))


def cbrt(z) -> Dual:
    z = _as_dual(z)
    x, y = z.x, z.y
    if x == 0:
        raise DomainError("cbrt derivative is singular at real(z) = 0", z)
    c = _real_root(x, 3)
    return Dual(c, y * c / (3 * x))


# exponential and logarithms

def exp(z) -> Dual:
    z = _as_dual(z)
    e = math.exp(z.x)
    return Dual(e, e * z.y)


def log(z) -> Dual:
    z = _as_dual(z)
    if not z.x > 0:
        raise DomainError("log is only defined for real(z) > 0", z)
    return Dual(math.log(z.x), z.y / z.x)


def log_base(c, z) -> Dual:
    """Logarithm to base ``c``: ln a / ln c + ε·b/(a·ln c)."""
    z = _as_dual(z)
    if isinstance(c, Dual):
        if c.y != 0:
            raise DomainError("logarithm base must be real", c)
        c = c.x
    if not (c > 0 and c != 1):
        raise DomainError("logarithm base must be positive and != 1", c)
    if not z.x > 0:
        raise DomainError("log is only defined for real(z) > 0", z)
    lc = math.log(c)
    return Dual(math.log(z.x) / lc, z.y / (z.x * lc))


# trigonometric

def sin(z) -> Dual:
    z = _as_dual(z)
    return Dual(math.sin(z.x), z.y * math.cos(z.x))


def cos(z) -> Dual:
    z = _as_dual(z)
    return Dual(math.cos(z.x), -z.y * math.sin(z.x))


def tan(z) -> Dual:
    z = _as_dual(z)
    c = math.cos(z.x)
    if c == 0:
        raise DomainError("tan is undefined where cos(real(z)) = 0", z)
    return Dual(math.tan(z.x), z.y / (c * c))


def cot(z) -> Dual:
    z = _as_dual(z)
    s = math.sin(z.x)
    if s == 0:
        raise DomainError("cot is undefined where sin(real(z)) = 0", z)
    return Dual(math.cos(z.x) / s, -z.y / (s * s))


def _check_unit_interval(name: str, z: Dual):
    if not -1 < z.x < 1:
        raise DomainError(f"{name} requires -1 < real(z) < 1", z)


def asin(z) -> Dual:
    z = _as_dual(z)
    _check_unit_interval("asin", z)
    return Dual(math.asin(z.x), z.y / math.sqrt(1 - z.x * z.x))


def acos(z) -> Dual:
    z = _as_dual(z)
    _check_unit_interval("acos", z)
    return Dual(math.acos(z.x), -z.y / math.sqrt(1 - z.x * z.x))


def atan(z) -> Dual:
    z = _as_dual(z)
    return Dual(math.atan(z.x), z.y / (1 + z.x * z.x))


def acot(z) -> Dual:
    # acot(a) = atan(1/a), acot(0) = pi/2
    z = _as_dual(z)
    value = math.pi / 2 if z.x == 0 else math.atan(1 / z.x)
    return Dual(value, -z.y / (1 + z.x * z.x))


# hyperbolic

def _sech2(x) -> float:
    try:
        c = math.cosh(x)
    except OverflowError:
        return 0.0
    return 1 / (c * c)


def _csch2(x) -> float:
    try:
        s = math.sinh(x)
    except OverflowError:
        return 0.0
    return 1 / (s * s)


def sinh(z) -> Dual:
    z = _as_dual(z)
    return Dual(math.sinh(z.x), z.y * math.cosh(z.x))


def cosh(z) -> Dual:
    z = _as_dual(z)
    return Dual(math.cosh(z.x), z.y * math.sinh(z.x))


def tanh(z) -> Dual:
    z = _as_dual(z)
    return Dual(math.tanh(z.x), z.y * _sech2(z.x))


def coth(z) -> Dual:
    z = _as_dual(z)
    if z.x == 0:
        raise DomainError("coth is undefined at real(z) = 0", z)
    return Dual(1 / math.tanh(z.x), -z.y * _csch2(z.x))


FUNCTIONS: dict[str, Callable[[Dual], Dual]] = {
    "sin": sin, "cos": cos, "tan": tan, "cot": cot,
    "asin": asin, "acos": acos, "atan": atan, "acot": acot,
    "sinh": sinh, "cosh": cosh, "tanh": tanh, "coth": coth,
    "exp": exp, "log": log, "sqrt": sqrt, "cbrt": cbrt,
}
