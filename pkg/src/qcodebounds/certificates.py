"""
LP certificates for the dimension of a stabilizer code.

A certificate is a coefficient vector f_0..f_n together with a nonempty set S
of distinguished weights. If

    i)  f_x > 0 for x in S and f_x >= 0 otherwise, and
    ii) f(x) = sum_j f_j K_j(x) <= 0 for x outside S,

then K <= q^(-n) max_{x in S} f(x)/f_x. The canonical family used here is the
"Hamming" certificate f_j = (K_0(j) + ... + K_e(j))^2 with S = {0, ..., 2e};
whenever f(0)/f_0 is the largest ratio over S the bound collapses to the
sphere-packing value q^n / V(n, q, e).
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .errors import CertificateInfeasibleError, DivisionUndefinedError, DomainError
from .exactmath import power
from .krawtchouk import KrawtchoukContext, dot

__all__ = [
    "Certificate",
    "Violation",
    "ConditionReport",
    "LPBound",
    "ClosedFormE2",
    "DominanceReport",
    "hamming_certificate",
    "evaluate_certificate",
    "certificate_values",
    "verify_conditions",
    "lp_bound",
    "closed_form_e2",
    "ratio_table",
    "dominance_flags",
    "dominance_check",
    "dominance_threshold",
]


@dataclass(frozen=True)
class Certificate:
    ctx: KrawtchoukContext
    S: tuple[int, ...]
    coeffs: tuple[Fraction, ...]

    def __init__(
        self,
        ctx: KrawtchoukContext,
        S: Iterable[int],
        coeffs: Sequence[int | Fraction],
    ) -> None:
        S = tuple(sorted(set(S)))
        coeffs = tuple(Fraction(c) for c in coeffs)
        if not S:
            raise DomainError("distinguished set S must be nonempty")
        if S[0] < 0 or S[-1] > ctx.n:
            raise DomainError(f"S={S} not contained in [0, {ctx.n}]")
        if len(coeffs) != ctx.n + 1:
            raise DomainError(f"expected {ctx.n + 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def q(self) -> int:
        return self.ctx.q

    def scaled(self, factor: int | Fraction) -> Certificate:
        return Certificate(self.ctx, self.S, [c * factor for c in self.coeffs])


class Violation(NamedTuple):
    x: int
    value: Fraction
    condition: str  # "i" (coefficient sign) or "ii" (value sign)


@dataclass(frozen=True)
class ConditionReport:
    condition_i_ok: bool
    condition_ii_ok: bool
    violations: tuple[Violation, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.condition_i_ok and self.condition_ii_ok


class LPBound(NamedTuple):
    bound: Fraction
    argmax: int


def hamming_certificate(n: int, q: int, e: int) -> Certificate:
    """Certificate with f_j = (sum_{i<=e} K_i(j))^2 and S = {0, ..., 2e}."""
    if e < 1:
        raise DomainError(f"radius must be at least 1, got e={e}")
    if n < 2 * e + 1:
        raise DomainError(f"need n >= 2e+1 = {2 * e + 1}, got n={n}")
    ctx = KrawtchoukContext(n, q)
    coeffs = [sum(ctx.low_degrees(j, e)) ** 2 for j in range(n + 1)]
    return Certificate(ctx, range(2 * e + 1), coeffs)


def evaluate_certificate(cert: Certificate, x: int) -> Fraction:
    """f(x) = sum_j f_j K_j(x)."""
    return dot(cert.coeffs, cert.ctx.column(x))


def certificate_values(cert: Certificate) -> list[Fraction]:
    return [evaluate_certificate(cert, x) for x in range(cert.n + 1)]


def verify_conditions(cert: Certificate) -> ConditionReport:
    """Check both LP conditions exactly and collect every violation."""
    in_s = set(cert.S)
    violations = []
    for x, fx in enumerate(cert.coeffs):
        if (x in in_s and fx <= 0) or (x not in in_s and fx < 0):
            violations.append(Violation(x, fx, "i"))
    n_coeff_violations = len(violations)
    for x in range(cert.n + 1):
        if x in in_s:
            continue
        value = evaluate_certificate(cert, x)
        if value > 0:
            violations.append(Violation(x, value, "ii"))
    return ConditionReport(
        condition_i_ok=n_coeff_violations == 0,
        condition_ii_ok=len(violations) == n_coeff_violations,
        violations=tuple(violations),
    )


def ratio_table(cert: Certificate) -> list[tuple[int, Fraction]]:
    """``(x, f(x)/f_x)`` for every x in S, ascending in x."""
    rows = []
    for x in cert.S:
        fx = cert.coeffs[x]
        if fx == 0:
            raise DivisionUndefinedError(f"f_x is zero at distinguished weight x={x}")
        rows.append((x, evaluate_certificate(cert, x) / fx))
    return rows


def lp_bound(cert: Certificate) -> LPBound:
    """
    The dimension bound q^(-n) max_{x in S} f(x)/f_x and the weight attaining it.

    The certificate is re-validated first; ties on the maximum go to the
    smallest weight.
    """
    report = verify_conditions(cert)
    if not report.ok:
        v = report.violations[0]
        raise CertificateInfeasibleError(
            f"condition {v.condition} violated at x={v.x} (value {v.value})"
        )
    best_x, best = None, None
    for x, ratio in ratio_table(cert):
        if best is None or ratio > best:
            best_x, best = x, ratio
    return LPBound(best / power(cert.q, cert.n), best_x)


@dataclass(frozen=True)
class ClosedFormE2:
    """The printed closed forms for the e = 2 certificate, f_0..f_4 and f(0)..f(4)."""

    coeffs: tuple[Fraction, ...]
    values: tuple[Fraction, ...]


def closed_form_e2(n: int, q: int) -> ClosedFormE2:
    """Evaluate the published e = 2 formulas exactly, term by term as printed."""
    if n < 5 or q < 2:
        raise DomainError(f"closed forms need n >= 5 and q >= 2, got n={n}, q={q}")
    half = Fraction(1, 2)
    w = q * q - 1
    p = q * q - 2
    Q2n = power(q, 2 * n)
    coeffs = (
        (1 + n * w + Fraction(n * (n - 1) * w**2, 2)) ** 2,
        Fraction(1, 4) * (n - 1) ** 2 * (n - 2) ** 2 * w**4,
        (half * (n - 3) * (n - 2) * w**2 - (n - 2) * w) ** 2,
        (1 - 2 * (n - 3) * w + half * (n - 4) * (n - 3) * w**2) ** 2,
        (3 - 3 * (n - 4) * w + half * (n - 5) * (n - 4) * w**2) ** 2,
    )
    values = (
        Q2n * (1 + n * w + half * (n - 1) * n * w**2),
        Q2n * Fraction(q * q + 2 * (n - 1) * w + (n - 1) * p * w),
        Q2n * Fraction(4 + 4 * p + p**2 + 2 * (n - 2) * w),
        Q2n * Fraction(6 + 6 * p),
        Fraction(6 * Q2n),
    )
    return ClosedFormE2(tuple(Fraction(c) for c in coeffs), values)


def dominance_flags(n: int, q: int, e: int) -> tuple[bool, ...]:
    """For x = 1..2e, whether f(0)/f_0 >= f(x)/f_x on the Hamming certificate."""
    table = ratio_table(hamming_certificate(n, q, e))
    r0 = table[0][1]
    return tuple(r0 >= r for _, r in table[1:])


def dominance_check(n: int, q: int, e: int) -> bool:
    """True iff f(0)/f_0 is a maximal ratio over S = {0, ..., 2e}."""
    return all(dominance_flags(n, q, e))


@dataclass(frozen=True)
class DominanceReport:
    q: int
    e: int
    n_lo: int
    n_hi: int
    per_n: tuple[bool, ...]
    stable_threshold: int | None
    per_x_threshold: dict[int, int | None]
    failures: tuple[int, ...] = ()

    @property
    def stabilized(self) -> bool:
        return self.stable_threshold is not None

    def holds_at(self, n: int) -> bool:
        return self.per_n[n - self.n_lo]


def _stable_from(ns: Sequence[int], ok: Sequence[bool]) -> int | None:
    # smallest n with ok at every scanned n' >= n
    start = None
    for n, flag in zip(reversed(ns), reversed(ok)):
        if not flag:
            break
        start = n
    return start


def _flags_task(args: tuple[int, int, int]) -> tuple[bool, ...]:
    return dominance_flags(*args)


def dominance_threshold(
    q: int, e: int, n_max: int = 512, workers: int = 1
) -> DominanceReport:
    """
    Scan n = 2e+1 .. n_max and locate where f(0)/f_0 dominates for good.

    Only the scanned range is claimed; a threshold of ``None`` means the last
    scanned length still fails.
    """
    n_lo = 2 * e + 1
    if e < 1:
        raise DomainError(f"radius must be at least 1, got e={e}")
    if n_max < n_lo:
        raise DomainError(f"n_max={n_max} below the smallest legal length {n_lo}")
    ns = list(range(n_lo, n_max + 1))
    tasks = [(n, q, e) for n in ns]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            flags = list(pool.map(_flags_task, tasks, chunksize=8))
    else:
        flags = [_flags_task(t) for t in tasks]
    per_n = tuple(all(f) for f in flags)
    per_x = {
        x: _stable_from(ns, [f[x - 1] for f in flags]) for x in range(1, 2 * e + 1)
    }
    return DominanceReport(
        q=q,
        e=e,
        n_lo=n_lo,
        n_hi=n_max,
        per_n=per_n,
        stable_threshold=_stable_from(ns, per_n),
        per_x_threshold=per_x,
        failures=tuple(n for n, ok in zip(ns, per_n) if not ok),
    )
