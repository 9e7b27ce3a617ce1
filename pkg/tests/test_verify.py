from qcodebounds.verify import (
    BUG_CANDIDATE,
    MATCH,
    PAPER_DISCREPANCY,
    check_closed_forms,
    check_lemma7_statement,
    check_orthogonality_constant,
)


def test_every_check_once(findings):
    assert len(findings) == 26
    assert all(f.verdict in {MATCH, PAPER_DISCREPANCY, BUG_CANDIDATE} for f in findings.values())


def test_no_implementation_bug_candidates(findings):
    assert [f.check_id for f in findings.values() if f.verdict == BUG_CANDIDATE] == []


def test_expected_paper_discrepancies(findings):
    flagged = {k for k, f in findings.items() if f.verdict == PAPER_DISCREPANCY}
    assert flagged == {
        "appendix-orthogonality-constant",
        "lemma7-statement-discriminant",
        "lemma1-dominance",
        "lemma2-threshold-x1",
        "lemma3-threshold-x2",
        "lemma4-threshold-x3",
        "lemma5-threshold-x4",
    }


def test_orthogonality_constant_finding():
    f = check_orthogonality_constant()
    assert f.verdict == PAPER_DISCREPANCY
    assert f.expected == "q^n = 2" and f.actual.startswith("4")


def test_dominance_finding_names_failures(findings):
    f = findings["lemma1-dominance"]
    assert "q=2: 9" in f.actual and "n=[7, 8]" in f.actual


def test_closed_form_mismatch_is_not_silent(monkeypatch):
    import qcodebounds.verify as verify
    from qcodebounds.certificates import ClosedFormE2

    real = verify.closed_form_e2

    def typo(n, q):
        cf = real(n, q)
        return ClosedFormE2(cf.coeffs[:2] + (cf.coeffs[2] + 1,) + cf.coeffs[3:], cf.values)

    monkeypatch.setattr(verify, "closed_form_e2", typo)
    out = {f.check_id: f for f in check_closed_forms(ns=range(5, 8), qs=(2,))}
    assert out["lemma1-closed-form-f_2"].verdict == PAPER_DISCREPANCY
    assert "printed" in out["lemma1-closed-form-f_2"].actual
    assert out["lemma1-closed-form-f_1"].verdict == MATCH


def test_statement_discriminant_details():
    f = check_lemma7_statement()
    assert "q=3: stated 52486 vs 52516" in f.actual
