import pytest

from qcodebounds.errors import DomainError
from qcodebounds.krawtchouk import sphere_volume
from qcodebounds.mds import (
    mds_exclusion_scan,
    mds_max_length_e1,
    mds_max_length_e2_statement,
    mds_max_length_e2_upper,
    mds_report,
)

QS = range(2, 10)


@pytest.mark.parametrize("q, expected", [(2, 5), (3, 10), (5, 26)])
def test_e1_formula(q, expected):
    assert mds_max_length_e1(q) == expected


@pytest.mark.parametrize("q, expected", [(2, 7), (3, 14)])
def test_e2_formula(q, expected):
    assert mds_max_length_e2_upper(q) == expected


def test_e2_hand_sums():
    assert sphere_volume(7, 2, 2) == 211 <= 2**8 < sphere_volume(8, 2, 2) == 277
    assert sphere_volume(14, 3, 2) == 5937 <= 3**8 < sphere_volume(15, 3, 2) == 6841


@pytest.mark.parametrize("q, e, expected", [(2, 1, 5), (2, 2, 7), (3, 2, 14)])
def test_scan_examples(q, e, expected):
    assert mds_exclusion_scan(q, e, 100) == expected


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("e", [3, 4, 5])
def test_scan_brackets_the_crossing(q, e):
    n = mds_exclusion_scan(q, e)
    assert sphere_volume(n, q, e) <= q ** (4 * e) < sphere_volume(n + 1, q, e)


def test_scan_none_admissible(monkeypatch):
    # not reachable for q <= 9, e < 40; force it to exercise the marker
    import qcodebounds.mds as mds

    monkeypatch.setattr(mds, "sphere_volume", lambda n, q, e: q ** (4 * e) + 1)
    assert mds.mds_exclusion_scan(2, 2) is None


def test_scan_horizon_cap():
    assert mds_exclusion_scan(9, 2, 20) == 20


def test_scan_domain():
    with pytest.raises(DomainError):
        mds_exclusion_scan(2, 2, 4)
    with pytest.raises(DomainError):
        mds_exclusion_scan(1, 1)
    with pytest.raises(DomainError):
        mds_exclusion_scan(2, 0)


@pytest.mark.parametrize("q", QS)
def test_scan_reproduces_e1_formula(q):
    assert mds_exclusion_scan(q, 1) == q * q + 1 == mds_max_length_e1(q)


@pytest.mark.parametrize("q", QS)
def test_scan_reproduces_e2_formula(q):
    assert mds_exclusion_scan(q, 2) == mds_max_length_e2_upper(q)


@pytest.mark.parametrize("e", [1, 2, 3])
def test_bound_nondecreasing_in_q(e):
    values = [mds_exclusion_scan(q, e) for q in QS]
    assert values == sorted(values)


def test_equality_does_not_exclude():
    # V(q^2+1, q, 1) = q^4 exactly
    for q in QS:
        n = q * q + 1
        assert sphere_volume(n, q, 1) == q**4
        assert mds_exclusion_scan(q, 1) == n


def test_statement_discriminant_coincides_only_at_q2():
    assert mds_max_length_e2_statement(2) == mds_max_length_e2_upper(2)
    for q in range(3, 10):
        assert (q * q - 3) + 8 * (q**8 - 1) != (q * q - 3) ** 2 + 8 * (q**8 - 1)


@pytest.mark.parametrize("q, e, expected", [(2, 1, 5), (2, 2, 7), (4, 1, 17)])
def test_report_agrees(q, e, expected):
    report = mds_report(q, e)
    assert report.formula_bound == report.scan_bound == expected
    assert report.agree and report.finding is None
    assert report.reference_cap == 2 * q * q - 2


def test_report_general_e_has_no_formula():
    report = mds_report(3, 3)
    assert report.formula_bound is None and report.agree is None
    assert report.scan_bound == mds_exclusion_scan(3, 3)


def test_report_surfaces_disagreement():
    # a horizon below the true value forces the scan to disagree
    report = mds_report(3, 2, n_max=10)
    assert report.agree is False
    assert "disagrees" in report.finding
