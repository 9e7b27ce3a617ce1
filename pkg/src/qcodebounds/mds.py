"""
Maximal lengths of quantum MDS codes.

An ((n, q^k, 2e+1))_q MDS code has K = q^(n-4e). If the Hamming bound is
strictly tighter, i.e. V(n, q, e) > q^(4e), no such code exists; since V grows
with n, the admissible lengths form an initial segment.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .exactmath import isqrt_floor, power
from .krawtchouk import sphere_volume

__all__ = [
    "MdsLengthReport",
    "mds_max_length_e1",
    "mds_max_length_e2_upper",
    "mds_max_length_e2_statement",
    "mds_exclusion_scan",
    "mds_report",
    "singleton_side_cap",
]

DEFAULT_SCAN_HORIZON = 4096


def _check_q(q: int) -> None:
    if q < 2:
        raise DomainError(f"field size must be at least 2, got q={q}")


def mds_max_length_e1(q: int) -> int:
    """Single-error MDS codes exist only up to length q^2 + 1."""
    _check_q(q)
    return q * q + 1


def _root_floor(q: int, disc: int) -> int:
    w = q * q - 1
    root, _ = isqrt_floor(disc)
    # floor((a + sqrt(D)) / m) == floor((a + isqrt(D)) / m) for integer a, m > 0
    return (q * q - 3 + root) // (2 * w)


def mds_max_length_e2_upper(q: int) -> int:
    """
    Largest n with n^2 w^2 - n w (q^2-3) - 2(q^8-1) <= 0, where w = q^2 - 1.

    The positive root is (q^2-3 + sqrt((q^2-3)^2 + 8(q^8-1))) / 2w; an integer
    root is still admissible since Hamming = Singleton does not rule out MDS.
    """
    _check_q(q)
    return _root_floor(q, (q * q - 3) ** 2 + 8 * (q**8 - 1))


def mds_max_length_e2_statement(q: int) -> int:
    """The same root with the discriminant as printed in the lemma statement,
    (q^2-3) + 8(q^8-1), unsquared first term. Kept only for comparison."""
    _check_q(q)
    return _root_floor(q, (q * q - 3) + 8 * (q**8 - 1))


def mds_exclusion_scan(q: int, e: int, n_max: int = DEFAULT_SCAN_HORIZON) -> int | None:
    """
    Largest n <= n_max with V(n, q, e) <= q^(4e), or ``None`` if even n = 2e+1
    is excluded.
    """
    _check_q(q)
    if e < 1:
        raise DomainError(f"radius must be at least 1, got e={e}")
    if n_max < 2 * e + 1:
        raise DomainError(f"n_max={n_max} below 2e+1={2 * e + 1}")
    cap = power(q, 4 * e)
    last = None
    for n in range(2 * e + 1, n_max + 1):
        if sphere_volume(n, q, e) > cap:
            break
        last = n
    return last


def singleton_side_cap(q: int) -> int:
    """Prior-work length cap 2q^2 - 2 for q-ary quantum MDS codes (reference only)."""
    return 2 * q * q - 2


@dataclass(frozen=True)
class MdsLengthReport:
    q: int
    e: int
    formula_bound: int | None
    scan_bound: int | None
    reference_cap: int
    reference_note: str
    finding: str | None = None

    @property
    def agree(self) -> bool | None:
        if self.formula_bound is None:
            return None
        return self.formula_bound == self.scan_bound


def mds_report(q: int, e: int, n_max: int = DEFAULT_SCAN_HORIZON) -> MdsLengthReport:
    """Closed-form length bound (e in {1, 2}) next to the generic exact scan."""
    _check_q(q)
    formula = {1: mds_max_length_e1, 2: mds_max_length_e2_upper}.get(e)
    formula_bound = formula(q) if formula else None
    scan_bound = mds_exclusion_scan(q, e, n_max)
    finding = None
    if formula_bound is not None and formula_bound != scan_bound:
        finding = (
            f"closed-form bound {formula_bound} disagrees with exact scan {scan_bound} "
            f"(q={q}, e={e})"
        )
    return MdsLengthReport(
        q=q,
        e=e,
        formula_bound=formula_bound,
        scan_bound=scan_bound,
        reference_cap=singleton_side_cap(q),
        reference_note="maximal q-ary quantum MDS length is upper bounded by 2q^2-2",
        finding=finding,
    )
