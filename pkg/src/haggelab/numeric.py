"""Scalar arithmetic over two backends.

A scalar is either a :class:`fractions.Fraction` (the exact backend) or a
Python ``float`` (the floating backend).  Integers are accepted on input and
promoted to ``Fraction``.  Nothing here promotes between backends silently:
mixing them raises :class:`MixedBackend`.
"""
from __future__ import annotations

import contextvars
import enum
import math
import re
from contextlib import contextmanager
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Optional, Union

from .errors import (
    DivisionByZero,
    IrrationalInRationalBackend,
    MixedBackend,
    NegativeArgument,
)

Scalar = Union[Fraction, float]

# absolute tolerance for float zero tests; inputs are expected at unit scale
EPS = 1e-12


class Backend(str, enum.Enum):
    RATIONAL = "rational"
    FLOAT = "float"


def backend_of(x: Scalar) -> Backend:
    if isinstance(x, float):
        return Backend.FLOAT
    if isinstance(x, (Fraction, int)):
        return Backend.RATIONAL
    raise TypeError(f"not a scalar: {x!r}")


def coerce(x, backend: Backend = Backend.RATIONAL) -> Scalar:
    """Convert ``x`` (int, Fraction, float or text) into ``backend``."""
    if isinstance(x, str):
        x = parse_scalar(x)
    if backend is Backend.FLOAT:
        return float(x)
    if isinstance(x, float):
        # exact binary value; use parse_scalar for decimal semantics
        return Fraction(x)
    return Fraction(x)


def _check(a: Scalar, b: Scalar) -> None:
    if backend_of(a) is not backend_of(b):
        raise MixedBackend(f"cannot combine {type(a).__name__} and {type(b).__name__}")


def add(a: Scalar, b: Scalar) -> Scalar:
    _check(a, b)
    return a + b


def sub(a: Scalar, b: Scalar) -> Scalar:
    _check(a, b)
    return a - b


def mul(a: Scalar, b: Scalar) -> Scalar:
    _check(a, b)
    return a * b


def div(a: Scalar, b: Scalar) -> Scalar:
    _check(a, b)
    if b == 0:
        raise DivisionByZero("division by zero")
    return a / b


def _isqrt_exact(n: int) -> int | None:
    r = math.isqrt(n)
    return r if r * r == n else None


def sqrt(a: Scalar) -> Scalar:
    if a < 0:
        raise NegativeArgument(f"sqrt of negative value {a}")
    if isinstance(a, float):
        return math.sqrt(a)
    a = Fraction(a)
    num = _isqrt_exact(a.numerator)
    den = _isqrt_exact(a.denominator)
    if num is None or den is None:
        raise IrrationalInRationalBackend(f"sqrt({a}) is not rational")
    return Fraction(num, den)


_tolerance: contextvars.ContextVar = contextvars.ContextVar("tolerance", default=EPS)


@contextmanager
def tolerance(eps: float):
    """Temporarily change the float zero threshold used by every predicate."""
    token = _tolerance.set(eps)
    try:
        yield
    finally:
        _tolerance.reset(token)


def is_zero(a: Scalar, eps: Optional[float] = None) -> bool:
    if isinstance(a, float):
        return abs(a) <= (_tolerance.get() if eps is None else eps)
    return a == 0


def sign(a: Scalar, eps: Optional[float] = None) -> int:
    if is_zero(a, eps):
        return 0
    return 1 if a > 0 else -1


def eq(a: Scalar, b: Scalar, eps: Optional[float] = None) -> bool:
    return is_zero(a - b, eps)


_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*(\d+)\s*$")


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p/q"`` or a decimal literal into an exact fraction.

    Decimals are read in base 10, so ``"0.1"`` is exactly ``1/10``.
    """
    m = _FRACTION_RE.match(text)
    if m:
        q = int(m.group(2))
        if q == 0:
            raise DivisionByZero(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), q)
    try:
        d = Decimal(text.strip())
    except InvalidOperation:
        raise ValueError(f"not a scalar literal: {text!r}") from None
    if not d.is_finite():
        raise ValueError(f"not a finite scalar: {text!r}")
    return Fraction(d)


def format_scalar(x: Scalar) -> str:
    """Serialize in lowest terms (``"p/q"`` or ``"p"``); floats use ``repr``."""
    if isinstance(x, float):
        return repr(x)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
