import pytest

from coinv import checks
from coinv._limits import CapacityError
from coinv.checks import (
    VERIFIERS, verify_basis, verify_major_index_sums, verify_phi_A, verify_phi_B, verify_thm_4_1,
    verify_thm_5_2,
)


@pytest.mark.parametrize("kind,n", [("A", n) for n in range(1, 6)] + [("B", n) for n in range(1, 4)])
def test_basis_checks(kind, n):
    r = verify_basis(kind, n)
    assert r.passed, r.first_discrepancy
    assert r.counts["elements"] == r.counts["expected"]


def test_basis_a_n1_single_element():
    r = verify_basis("A", 1)
    assert r.passed and r.counts["elements"] == 1


@pytest.mark.parametrize("n", range(1, 5))
def test_refined_multiplicities_type_A(n):
    assert verify_thm_4_1(n).passed


@pytest.mark.parametrize("n", [1, 2])
def test_refined_multiplicities_type_B(n):
    assert verify_thm_5_2(n).passed


@pytest.mark.parametrize("kind,n", [("A", 3), ("A", 4), ("B", 2)])
def test_major_index_sums(kind, n):
    assert verify_major_index_sums(kind, n).passed


def test_phi_checks_small():
    a = verify_phi_A(3, 4)
    b = verify_phi_B(3, 4)
    assert a.passed and b.passed
    assert a.counts["fillings"] == a.lhs_terms == a.rhs_terms > 0
    assert b.counts["fillings"] == b.lhs_terms == b.rhs_terms > 0


def test_phi_count_negative_control(monkeypatch):
    # drop one filling from the enumeration: the image count must no longer match
    real = checks.enumerate_RSSYT

    def short(lam, max_entry, *a, **k):
        out = list(real(lam, max_entry, *a, **k))
        return out[1:] if lam == (1,) else out

    monkeypatch.setattr(checks, "enumerate_RSSYT", short)
    r = verify_phi_A(2, 3)
    assert r.status == "fail" and r.first_discrepancy["reason"] == "image count"


def test_capacity():
    with pytest.raises(CapacityError):
        verify_basis("A", 8)
    with pytest.raises(CapacityError):
        verify_thm_5_2(4)
    with pytest.raises(ValueError):
        verify_basis("A", 0)


def test_verifier_names():
    assert set(VERIFIERS) == {
        "thm7.1", "thm7.2", "thm7.3", "thm7.4", "cor-gessel", "cor-abr", "lemma-tau",
        "lemma-tau-b", "traces", "thm4.1", "thm5.2", "basis-a", "basis-b", "phi-a", "phi-b",
    }
