"""Exhaustive checks of the basis, the tableau bijections and the descent-representation multiplicities.

Every routine returns a :class:`~coinv.report.Report`; ``VERIFIERS`` maps the
command-line names to the routine and the parameters it takes.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from math import comb
from typing import Callable

from coinv._limits import check_n
from coinv.reptheory import (
    bn_character, descent_rep_character, inner_product, sn_character,
)
from coinv.report import Report, timed
from coinv.shapes import (
    bipartitions_of, enumerate_RSSYT,
    enumerate_RSSYT_B, enumerate_SYT, enumerate_SYT_bi, lambda_S1S2, partitions_of, phi_A,
    phi_A_inverse, phi_B, phi_B_inverse,
)
from coinv.straighten import MAX_N, basis, normal_form
from coinv import series

__all__ = [
    "verify_basis", "verify_thm_4_1", "verify_thm_5_2", "verify_major_index_sums",
    "verify_phi_A", "verify_phi_B", "VERIFIERS",
]


def _subsets(universe: range) -> list[tuple[int, ...]]:
    items = list(universe)
    return [c for k in range(len(items) + 1) for c in combinations(items, k)]


def verify_basis(kind: str, n: int) -> Report:
    """Size, distinct exponents, and unit normal forms of the (signed) descent basis."""
    report = Report("basis-a" if kind == "A" else "basis-b", {"n": n})
    with timed(report):
        if n < 1:
            raise ValueError("verify_basis: n must be positive")
        check_n(n, 7 if kind == "A" else 5, "verify_basis")
        pairs = basis(kind, n)
        expected = 1
        for i in range(1, n + 1):
            expected *= i if kind == "A" else 2 * i
        monos = [m for _, m in pairs]
        report.counts = {"elements": len(pairs), "expected": expected}
        if len(pairs) != expected:
            report.fail({"reason": "basis size", "got": len(pairs), "expected": expected})
        if len(set(monos)) != len(monos):
            dup = [m for m, c in Counter(monos).items() if c > 1][0]
            report.fail({"reason": "repeated exponent vector", "monomial": list(dup)})
        # normal forms are available up to the straightening bound
        if n <= MAX_N[kind]:
            for g, m in pairs:
                nf = normal_form(m, kind)
                report.lhs_terms += 1
                if dict(nf.coeffs) != {g: 1}:
                    report.fail({"reason": "normal form is not a unit vector", "element": str(g)})
    return report


def verify_thm_4_1(n: int) -> Report:
    """For each S and mu: <chi^{R_S}, chi^mu> equals #{T in SYT(mu) : Des(T) = S}."""
    report = Report("thm4.1", {"n": n})
    with timed(report):
        if n < 1:
            raise ValueError("verify_thm_4_1: n must be positive")
        check_n(n, 5, "verify_thm_4_1")
        irreps = {mu: sn_character(mu) for mu in partitions_of(n)}
        des_counts = {mu: Counter(T.des_set for T in enumerate_SYT(mu)) for mu in irreps}
        pairs = 0
        for S in _subsets(range(1, n)):
            chi = descent_rep_character("A", n, S)
            for mu, irr in irreps.items():
                pairs += 1
                got = inner_product(chi, irr)
                want = des_counts[mu][S]
                if got != want:
                    report.fail({"S": list(S), "mu": list(mu), "inner_product": got, "tableaux": want})
        report.counts = {"pairs": pairs}
        report.lhs_terms = report.rhs_terms = pairs
    return report


def verify_thm_5_2(n: int) -> Report:
    """For each (S1, S2) and (mu1, mu2): multiplicity equals the bitableau count with Des = S1, Neg = S2.

    When lambda_(S1,S2) is not a partition the representation is zero and the
    bitableau count must vanish as well.
    """
    report = Report("thm5.2", {"n": n})
    with timed(report):
        if n < 1:
            raise ValueError("verify_thm_5_2: n must be positive")
        check_n(n, 3, "verify_thm_5_2")
        irreps = {lab: bn_character(*lab) for lab in bipartitions_of(n)}
        counts = {lab: Counter((T.des_set, T.neg_set) for T in enumerate_SYT_bi(*lab)) for lab in irreps}
        pairs = 0
        for S1 in _subsets(range(1, n)):
            for S2 in _subsets(range(1, n + 1)):
                _, ok = lambda_S1S2(S1, S2, n)
                chi = descent_rep_character("B", n, S1, S2) if ok else None
                for lab, irr in irreps.items():
                    pairs += 1
                    want = counts[lab][(S1, S2)]
                    got = inner_product(chi, irr) if ok else 0
                    if got != want:
                        report.fail({"S1": list(S1), "S2": list(S2), "mu": [list(lab[0]), list(lab[1])],
                                     "inner_product": got, "tableaux": want})
        report.counts = {"pairs": pairs}
        report.lhs_terms = report.rhs_terms = pairs
    return report


def verify_major_index_sums(kind: str, n: int) -> Report:
    """Summing multiplicities over descent data of fixed (flag) major index gives the tableau (f)maj counts."""
    report = Report("maj-sums-" + kind.lower(), {"n": n})
    with timed(report):
        check_n(n, 5 if kind == "A" else 3, "verify_major_index_sums")
        sums: Counter = Counter()
        if kind == "A":
            irreps = {mu: sn_character(mu) for mu in partitions_of(n)}
            for S in _subsets(range(1, n)):
                chi = descent_rep_character("A", n, S)
                for mu, irr in irreps.items():
                    sums[(mu, sum(S))] += inner_product(chi, irr)
            want = Counter()
            for mu in irreps:
                for T in enumerate_SYT(mu):
                    want[(mu, T.maj)] += 1
        else:
            irreps = {lab: bn_character(*lab) for lab in bipartitions_of(n)}
            for S1 in _subsets(range(1, n)):
                for S2 in _subsets(range(1, n + 1)):
                    if not lambda_S1S2(S1, S2, n)[1]:
                        continue
                    chi = descent_rep_character("B", n, S1, S2)
                    for lab, irr in irreps.items():
                        sums[(lab, 2 * sum(S1) + len(S2))] += inner_product(chi, irr)
            want = Counter()
            for lab in irreps:
                for T in enumerate_SYT_bi(*lab):
                    want[(lab, T.fmaj)] += 1
        sums = Counter({k: v for k, v in sums.items() if v})
        report.lhs_terms, report.rhs_terms = len(sums), len(want)
        for key in sorted(set(sums) | set(want), key=repr):
            if sums[key] != want[key]:
                report.fail({"class": repr(key), "multiplicity_sum": sums[key], "tableaux": want[key]})
                break
    return report


def _shapes_up_to(size: int) -> list[tuple[int, ...]]:
    return [lam for k in range(1, size + 1) for lam in partitions_of(k)]


def verify_phi_A(max_size: int = 5, max_entry: int = 7) -> Report:
    """Round trip of T-hat -> (T, Delta), the reconstruction identity, and a count of the image."""
    report = Report("phi-a", {"max_size": max_size, "max_entry": max_entry})
    with timed(report):
        check_n(max_size, 5, "verify_phi_A")
        fillings = 0
        for lam in _shapes_up_to(max_size):
            n = sum(lam)
            for That in enumerate_RSSYT(lam, max_entry):
                fillings += 1
                T, delta = phi_A(That)
                if T.shape != lam or any(x < 0 for x in delta):
                    report.fail({"filling": repr(That.rows), "reason": "image out of range"})
                    continue
                entries = That.sorted_entries()
                if any(entries[i] - 1 != T.d_vector[i] + sum(delta[i:]) for i in range(n)):
                    report.fail({"filling": repr(That.rows), "reason": "reconstruction identity"})
                if phi_A_inverse(T, delta) != That:
                    report.fail({"filling": repr(That.rows), "reason": "round trip"})
            # pairs (T, Delta) whose largest entry 1 + d_1 + sum(Delta) fits under max_entry
            report.rhs_terms += sum(comb(max_entry - 1 - T.d_vector[0] + n, n)
                                    for T in enumerate_SYT(lam) if T.d_vector[0] <= max_entry - 1)
        report.lhs_terms = fillings
        report.counts = {"fillings": fillings}
        if report.lhs_terms != report.rhs_terms:
            report.fail({"reason": "image count", "fillings": fillings, "pairs": report.rhs_terms})
    return report


def verify_phi_B(max_size: int = 5, max_entry: int = 7) -> Report:
    report = Report("phi-b", {"max_size": max_size, "max_entry": max_entry})
    with timed(report):
        check_n(max_size, 5, "verify_phi_B")
        fillings = 0
        for k in range(1, max_size + 1):
            for lam1, lam2 in bipartitions_of(k):
                for That in enumerate_RSSYT_B(lam1, lam2, max_entry):
                    fillings += 1
                    T, delta = phi_B(That)
                    if T.shape != (lam1, lam2) or any(x < 0 for x in delta):
                        report.fail({"filling": repr((That.first, That.second)), "reason": "image out of range"})
                        continue
                    entries = That.sorted_entries()
                    f = T.f_vector
                    if any(entries[i] - 1 != f[i] + 2 * sum(delta[i:]) for i in range(k)):
                        report.fail({"filling": repr((That.first, That.second)), "reason": "reconstruction identity"})
                    if phi_B_inverse(T, delta) != That:
                        report.fail({"filling": repr((That.first, That.second)), "reason": "round trip"})
                # largest entry is 1 + f_1 + 2 sum(Delta)
                for T in enumerate_SYT_bi(lam1, lam2):
                    room = max_entry - 1 - T.f_vector[0]
                    if room >= 0:
                        report.rhs_terms += comb(room // 2 + k, k)
        report.lhs_terms = fillings
        report.counts = {"fillings": fillings}
        if report.lhs_terms != report.rhs_terms:
            report.fail({"reason": "image count", "fillings": fillings, "pairs": report.rhs_terms})
    return report


# name -> (routine, accepted parameters); parameters map to command-line flags
VERIFIERS: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "thm7.1": (series.verify_thm_7_1, ("n",)),
    "thm7.2": (series.verify_thm_7_2, ("n", "cutoff")),
    "thm7.3": (series.verify_thm_7_3, ("n", "cutoff")),
    "thm7.4": (series.verify_thm_7_4, ("n", "cutoff")),
    "cor-gessel": (series.verify_cor_gessel, ("n", "cutoff")),
    "cor-abr": (series.verify_cor_abr, ("n",)),
    "lemma-tau": (series.verify_lemma_tau, ("shape", "cutoff")),
    "lemma-tau-b": (series.verify_lemma_tau_B, ("shape", "shape2", "cutoff")),
    "traces": (series.verify_trace_claims, ("n", "cutoff", "type")),
    "thm4.1": (verify_thm_4_1, ("n",)),
    "thm5.2": (verify_thm_5_2, ("n",)),
    "basis-a": (lambda n: verify_basis("A", n), ("n",)),
    "basis-b": (lambda n: verify_basis("B", n), ("n",)),
    "phi-a": (verify_phi_A, ("n", "cutoff")),
    "phi-b": (verify_phi_B, ("n", "cutoff")),
}
