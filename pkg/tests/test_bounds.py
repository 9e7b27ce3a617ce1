from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcodebounds.bounds import (
    DEGENERATE_VALIDATED,
    PURE_ONLY,
    CodeParams,
    check_code,
    hamming_applicability,
    hamming_bound,
    singleton_bound,
)
from qcodebounds.certificates import dominance_threshold, hamming_certificate, lp_bound
from qcodebounds.errors import DomainError
from qcodebounds.mds import mds_exclusion_scan


def test_singleton_examples():
    assert singleton_bound(5, 3, 2) == 2
    assert singleton_bound(7, 1, 3) == 3**7
    assert singleton_bound(4, 2, 3) == 9
    assert singleton_bound(4, 4, 2) == Fraction(1, 4)


def test_hamming_examples():
    assert hamming_bound(5, 3, 2) == 2
    assert hamming_bound(6, 1, 3) == 3**6
    assert hamming_bound(10, 5, 2) == Fraction(256, 109)
    # even d uses e = floor((d-1)/2)
    assert hamming_bound(10, 4, 2) == hamming_bound(10, 3, 2)


def test_hamming_domain():
    with pytest.raises(DomainError):
        hamming_bound(3, 5, 2)


@pytest.mark.parametrize("d, expected", [(5, DEGENERATE_VALIDATED), (3, DEGENERATE_VALIDATED),
                                         (7, PURE_ONLY), (4, PURE_ONLY), (1, PURE_ONLY)])
def test_applicability(d, expected):
    assert hamming_applicability(d) == expected


def test_applicability_domain():
    with pytest.raises(DomainError):
        hamming_applicability(0)


def test_perfect_mds_code():
    report = check_code(CodeParams(5, 1, 3, 2))
    assert report.singleton_ok and report.hamming_ok
    assert report.meets_singleton_equality and report.meets_hamming_equality
    assert report.singleton_max_k == 1


def test_too_large_code_violates_both():
    report = check_code(CodeParams(5, 2, 3, 2))
    assert report.singleton_ok is False and report.hamming_ok is False
    assert not report.meets_singleton_equality and not report.meets_hamming_equality
    assert report.violated


def test_k_zero_not_applicable():
    report = check_code(CodeParams(8, 0, 3, 2))
    assert report.singleton_ok is None and report.hamming_ok is None
    assert not report.meets_singleton_equality and not report.meets_hamming_equality
    assert not report.violated and not report.applicable


def test_hamming_tighter_than_singleton():
    # ((8,2^4,3))_2 meets Singleton (k = 8-6+2 = 4) but V = 25 > 2^4
    report = check_code(CodeParams(8, 4, 3, 2))
    assert report.singleton_ok and report.meets_singleton_equality
    assert report.hamming_ok is False


@pytest.mark.parametrize("n, k, d, q", [(0, 0, 1, 2), (5, 1, 6, 2), (5, 6, 3, 2), (5, -1, 3, 2), (5, 1, 3, 1), (5, 1, 0, 2)])
def test_code_params_invariants(n, k, d, q):
    with pytest.raises(DomainError):
        CodeParams(n, k, d, q)


@given(st.integers(1, 40), st.data())
def test_report_flags_consistent(n, data):
    d = data.draw(st.integers(1, n))
    k = data.draw(st.integers(0, n))
    q = data.draw(st.integers(2, 9))
    report = check_code(CodeParams(n, k, d, q))
    if report.meets_singleton_equality:
        assert report.singleton_ok
    if report.meets_hamming_equality:
        assert report.hamming_ok
    if k > 0:
        K = q**k
        assert report.singleton_ok == (K <= report.singleton_max_K)
        assert report.hamming_ok == (K <= report.hamming_max_K)
        assert report.meets_hamming_equality == (K == report.hamming_max_K)


@given(st.integers(3, 40), st.integers(2, 9))
def test_hamming_strictly_decreasing_in_radius(n, q):
    for d in range(1, n):
        if d // 2 > (d - 1) // 2:
            assert hamming_bound(n, d + 1, q) < hamming_bound(n, d, q)
        else:
            assert hamming_bound(n, d + 1, q) == hamming_bound(n, d, q)


@pytest.mark.parametrize("d", [3, 5])
@pytest.mark.parametrize("q", range(2, 10))
def test_crossover_located(d, q):
    e = (d - 1) // 2
    crossover = next(
        n for n in range(d, 10_000) if hamming_bound(n, d, q) < singleton_bound(n, d, q)
    )
    assert all(hamming_bound(n, d, q) < singleton_bound(n, d, q) for n in range(crossover, crossover + 50))
    assert crossover == mds_exclusion_scan(q, e) + 1


@pytest.mark.parametrize("q", [2, 3, 5])
def test_hamming_equals_lp_bound_past_threshold(q):
    report = dominance_threshold(q, 2, 30)
    for n in range(report.stable_threshold, 31):
        assert hamming_bound(n, 5, q) == lp_bound(hamming_certificate(n, q, 2)).bound
