"""
Exact integer and rational primitives.

Integers are Python ``int`` (arbitrary precision) and rationals are
``fractions.Fraction``, which is always kept in lowest terms with a positive
denominator. Nothing in this package ever converts a bound to ``float``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import DomainError

ExactInt = int
ExactRational = Fraction

__all__ = [
    "ExactInt",
    "ExactRational",
    "binomial",
    "power",
    "isqrt_floor",
    "fraction_str",
]


def binomial(a: int, b: int) -> int:
    """C(a, b), taken as 0 whenever a < 0, b < 0 or b > a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def power(base: int, exp: int) -> int:
    """Exact ``base ** exp`` for a nonnegative exponent (``power(0, 0) == 1``)."""
    if exp < 0:
        raise DomainError(f"exponent must be nonnegative, got {exp}")
    result = 1
    while exp:
        if exp & 1:
            result *= base
        base *= base
        exp >>= 1
    return result


def isqrt_floor(v: int) -> tuple[int, bool]:
    """
    Floor of the square root of ``v`` and whether ``v`` is a perfect square.

    Newton iteration on integers, started above the root so the iterates
    decrease monotonically; a final correction step pins the floor.

    >>> isqrt_floor(2041)
    (45, False)
    >>> isqrt_floor(0)
    (0, True)
    """
    if v < 0:
        raise DomainError(f"square root of negative value {v}")
    if v < 2:
        return v, True
    x = 1 << ((v.bit_length() + 1) // 2)
    while True:
        y = (x + v // x) // 2
        if y >= x:
            break
        x = y
    while x * x > v:
        x -= 1
    while (x + 1) * (x + 1) <= v:
        x += 1
    return x, x * x == v


def fraction_str(value: int | Fraction) -> str:
    """Serialize an exact value as ``"p/q"`` (or ``"p"`` for integers)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
