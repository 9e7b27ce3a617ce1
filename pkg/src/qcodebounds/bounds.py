"""
Quantum Singleton and quantum Hamming bounds for ((n, K, d))_q codes.

K is carried as an exponent k with K = q^k, so every comparison is an exact
integer cross-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exactmath import power
from .krawtchouk import sphere_volume

__all__ = [
    "PURE_ONLY",
    "DEGENERATE_VALIDATED",
    "CodeParams",
    "BoundReport",
    "singleton_bound",
    "hamming_bound",
    "hamming_applicability",
    "check_code",
]

PURE_ONLY = "pure-only"
DEGENERATE_VALIDATED = "degenerate-validated"

# d = 3 is known from prior work; d = 5 is the double-error result.
_DEGENERATE_VALIDATED_DISTANCES = frozenset({3, 5})


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"n must be positive, got {self.n}")
        if self.q < 2:
            raise DomainError(f"q must be at least 2, got {self.q}")
        if not 1 <= self.d <= self.n:
            raise DomainError(f"need 1 <= d <= n, got d={self.d}, n={self.n}")
        if not 0 <= self.k <= self.n:
            raise DomainError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")

    @property
    def K(self) -> int:
        return power(self.q, self.k)

    def __str__(self) -> str:
        return f"(({self.n},{self.q}^{self.k},{self.d}))_{self.q}"


def singleton_bound(n: int, d: int, q: int) -> int | Fraction:
    """q^(n-2d+2); a Fraction below 1 when the exponent is negative."""
    exp = n - 2 * d + 2
    if exp >= 0:
        return power(q, exp)
    return Fraction(1, power(q, -exp))


def hamming_bound(n: int, d: int, q: int) -> Fraction:
    """q^n / V(n, q, floor((d-1)/2))."""
    if not 1 <= d <= n:
        raise DomainError(f"need 1 <= d <= n, got d={d}, n={n}")
    return Fraction(power(q, n), sphere_volume(n, q, (d - 1) // 2))


def hamming_applicability(d: int) -> str:
    """Whether the Hamming bound is known to cover degenerate codes at distance d."""
    if d < 1:
        raise DomainError(f"distance must be positive, got d={d}")
    return DEGENERATE_VALIDATED if d in _DEGENERATE_VALIDATED_DISTANCES else PURE_ONLY


@dataclass(frozen=True)
class BoundReport:
    """
    Verdict of both bounds for one parameter set.

    The ``*_ok`` flags are ``None`` for k = 0: both bounds assume K > 1.
    """

    params: CodeParams
    singleton_max_K: int | Fraction
    hamming_max_K: Fraction
    singleton_ok: bool | None
    hamming_ok: bool | None
    meets_singleton_equality: bool
    meets_hamming_equality: bool
    hamming_applicability: str

    @property
    def singleton_max_k(self) -> int:
        """Largest admissible k by the Singleton bound (may be negative)."""
        p = self.params
        return p.n - 2 * p.d + 2

    @property
    def applicable(self) -> bool:
        return self.params.k > 0

    @property
    def violated(self) -> bool:
        return self.singleton_ok is False or self.hamming_ok is False


def check_code(params: CodeParams) -> BoundReport:
    n, k, d, q = params.n, params.k, params.d, params.q
    s_max_k = n - 2 * d + 2
    volume = sphere_volume(n, q, (d - 1) // 2)
    # K * V <= q^n  <=>  V <= q^(n-k)
    lhs, rhs = volume, power(q, n - k)
    if k > 0:
        singleton_ok = k <= s_max_k
        hamming_ok = lhs <= rhs
        mds = k == s_max_k
        perfect = lhs == rhs
    else:
        singleton_ok = hamming_ok = None
        mds = perfect = False
    return BoundReport(
        params=params,
        singleton_max_K=singleton_bound(n, d, q),
        hamming_max_K=Fraction(power(q, n), volume),
        singleton_ok=singleton_ok,
        hamming_ok=hamming_ok,
        meets_singleton_equality=mds,
        meets_hamming_equality=perfect,
        hamming_applicability=hamming_applicability(d),
    )
