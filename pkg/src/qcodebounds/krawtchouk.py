"""
Krawtchouk polynomials over the squared alphabet Q = q^2.

    K_j(x) = sum_s (-1)^s (q^2-1)^(j-s) C(x, s) C(n-x, j-s)

Values are exact integers. A :class:`KrawtchoukContext` fixes ``(n, q)`` and
memoizes whole columns ``x -> [K_0(x), ..., K_n(x)]``; certificate code only
ever touches a handful of columns, so a full (n+1)^2 table is never forced.
"""

from __future__ import annotations

import threading
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import DomainError
from .exactmath import binomial, power

__all__ = [
    "KrawtchoukContext",
    "krawtchouk_eval",
    "krawtchouk_direct",
    "sphere_volume",
    "orthogonality_sum",
    "forward_expand",
    "inverse_transform",
]


def krawtchouk_direct(n: int, q: int, j: int, x: int) -> int:
    """Evaluate K_j(x) straight from the defining sum (no caching, no recurrence)."""
    w = q * q - 1
    return sum(
        (-1) ** s * power(w, j - s) * binomial(x, s) * binomial(n - x, j - s)
        for s in range(j + 1)
    )


@dataclass(frozen=True, eq=False)
class KrawtchoukContext:
    n: int
    q: int
    _columns: dict[int, tuple[int, ...]] = field(
        default_factory=dict, init=False, repr=False
    )
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"code length must be positive, got n={self.n}")
        if self.q < 2:
            raise DomainError(f"field size must be at least 2, got q={self.q}")

    @property
    def Q_minus_1(self) -> int:
        return self.q * self.q - 1

    @property
    def q_2n(self) -> int:
        """q^(2n), the size of the error space and the orthogonality constant."""
        return power(self.q, 2 * self.n)

    def _check_index(self, name: str, value: int) -> None:
        if not 0 <= value <= self.n:
            raise DomainError(f"{name}={value} outside [0, {self.n}]")

    def column(self, x: int) -> tuple[int, ...]:
        """All degrees at point x: ``(K_0(x), ..., K_n(x))``."""
        self._check_index("x", x)
        col = self._columns.get(x)
        if col is None:
            col = self._compute_column(x)
            with self._lock:
                col = self._columns.setdefault(x, col)
        return col

    def low_degrees(self, x: int, degree: int) -> tuple[int, ...]:
        """``(K_0(x), ..., K_degree(x))`` without filling the whole column."""
        self._check_index("x", x)
        col = self._columns.get(x)
        if col is not None:
            return col[: degree + 1]
        return self._compute_column(x, degree)

    def _compute_column(self, x: int, degree: int | None = None) -> tuple[int, ...]:
        # (j+1) K_{j+1} = (j + w(n-j) - Qx) K_j - w(n-j+1) K_{j-1}
        n, w = self.n, self.Q_minus_1
        top = n if degree is None else min(degree, n)
        Q = w + 1
        vals = [1, w * (n - x) - x]
        for j in range(1, top):
            num = (j + w * (n - j) - Q * x) * vals[j] - w * (n - j + 1) * vals[j - 1]
            vals.append(num // (j + 1))
        return tuple(vals[: top + 1])

    def value(self, j: int, x: int) -> int:
        self._check_index("j", j)
        return self.column(x)[j]


def krawtchouk_eval(ctx: KrawtchoukContext, j: int, x: int) -> int:
    """K_j(x) for the context's (n, q)."""
    return ctx.value(j, x)


def sphere_volume(n: int, q: int, e: int) -> int:
    """Number of q^2-ary error patterns of weight at most e on n positions."""
    if q < 2:
        raise DomainError(f"field size must be at least 2, got q={q}")
    if not 0 <= e <= n:
        raise DomainError(f"radius e={e} outside [0, n={n}]")
    w = q * q - 1
    return sum(binomial(n, i) * power(w, i) for i in range(e + 1))


def orthogonality_sum(ctx: KrawtchoukContext, a: int, b: int) -> int:
    """sum_i K_a(i) K_i(b); equals q^(2n) when a == b and 0 otherwise."""
    ctx._check_index("a", a)
    ctx._check_index("b", b)
    col_b = ctx.column(b)
    return sum(ctx.column(i)[a] * col_b[i] for i in range(ctx.n + 1))


def dot(weights: Sequence[Fraction], ints: Sequence[int]) -> Fraction:
    """Exact sum of w_i * k_i, accumulated over a common denominator."""
    den = lcm(*(w.denominator for w in weights)) if weights else 1
    num = sum(w.numerator * (den // w.denominator) * k for w, k in zip(weights, ints))
    return Fraction(num, den)


def forward_expand(
    ctx: KrawtchoukContext, coeffs: Sequence[int | Fraction]
) -> list[Fraction]:
    """Values f(0..n) of f(x) = sum_j f_j K_j(x)."""
    if len(coeffs) != ctx.n + 1:
        raise DomainError(f"expected {ctx.n + 1} coefficients, got {len(coeffs)}")
    coeffs = [Fraction(c) for c in coeffs]
    return [dot(coeffs, ctx.column(x)) for x in range(ctx.n + 1)]


def inverse_transform(
    ctx: KrawtchoukContext, values: Sequence[int | Fraction]
) -> list[Fraction]:
    """Recover f_i = q^(-2n) sum_x f(x) K_x(i) from the values f(0..n)."""
    if len(values) != ctx.n + 1:
        raise DomainError(f"expected {ctx.n + 1} values, got {len(values)}")
    values = [Fraction(v) for v in values]
    scale = ctx.q_2n
    return [dot(values, ctx.column(i)) / scale for i in range(ctx.n + 1)]
