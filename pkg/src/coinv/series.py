"""Truncated multivariate power series and the generating-function identities.

A :class:`TruncatedSeries` keeps every term whose weighted degree is at most
``cutoff``.  Truncation is a ring quotient, so sums and products of truncated
series are exact below the cutoff.  The default weight is total degree;
the Gessel check uses weight ``(1, 0)`` on ``(t, q)`` to truncate in ``t`` only.

The ``verify_*`` routines return a :class:`~coinv.report.Report`.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Mapping, Optional, Sequence

from coinv._limits import CapacityError, check_n
from coinv.groups import (
    SignedPermutation, cycle_type, enumerate_group, perm_stats,
    signed_cycle_type, signed_stats,
)
from coinv.polyring import (
    IntPolynomial, analyze_A, analyze_B, exponent_partition, monomials_of_degree,
    _act_monomial,
)
from coinv.report import Report, timed
from coinv.shapes import (
    conjugate, enumerate_RSSYT, enumerate_RSSYT_B, enumerate_SYT, enumerate_SYT_bi,
    is_partition, partition, partitions_in_box,
)
from coinv.straighten import graded_trace

__all__ = [
    "TruncatedSeries", "iota", "multinomial", "q_int", "partition_series",
    "partition_product", "power_sum_z", "power_sum_z_B", "trace_on_polynomials",
    "verify_lemma_tau", "verify_lemma_tau_B", "verify_thm_7_1", "verify_thm_7_2",
    "verify_thm_7_3", "verify_thm_7_4", "verify_cor_gessel", "verify_cor_abr",
    "verify_trace_claims", "verify_partition_product", "verify_monomial_bijection",
    "verify_descent_free_factor", "compare",
]

MAX_CUTOFF = 8

Exps = tuple[int, ...]


class TruncatedSeries:
    __slots__ = ("nvars", "cutoff", "weights", "_terms")

    def __init__(self, nvars: int, cutoff: int, terms: Optional[Mapping[Exps, object]] = None,
                 weights: Optional[Sequence[int]] = None):
        self.nvars = nvars
        self.cutoff = cutoff
        self.weights = tuple(weights) if weights is not None else (1,) * nvars
        if len(self.weights) != nvars:
            raise ValueError("one weight per variable is required")
        clean: dict[Exps, object] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} does not have {nvars} entries")
            if c and self.weight(exps) <= cutoff:
                clean[exps] = clean.get(exps, 0) + c
        self._terms = {e: c for e, c in clean.items() if c}

    def weight(self, exps: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))

    @classmethod
    def one(cls, nvars: int, cutoff: int, weights=None) -> "TruncatedSeries":
        return cls(nvars, cutoff, {(0,) * nvars: 1}, weights)

    @classmethod
    def monomial(cls, exps: Sequence[int], cutoff: int, coeff=1, weights=None) -> "TruncatedSeries":
        return cls(len(exps), cutoff, {tuple(exps): coeff}, weights)

    @classmethod
    def from_polynomial(cls, p: IntPolynomial, cutoff: int, weights=None) -> "TruncatedSeries":
        return cls(p.n, cutoff, p.terms, weights)

    @classmethod
    def geometric(cls, exps: Sequence[int], cutoff: int, coeff=1, weights=None) -> "TruncatedSeries":
        """``1 / (1 - coeff * x^exps)`` truncated; ``x^exps`` must have positive weight."""
        exps = tuple(exps)
        out = cls(len(exps), cutoff, weights=weights)
        step = out.weight(exps)
        if step <= 0:
            raise ValueError("geometric_inverse needs a monomial of positive weight")
        terms = {}
        k = 0
        while k * step <= cutoff:
            terms[tuple(k * e for e in exps)] = coeff ** k
            k += 1
        return cls(len(exps), cutoff, terms, weights)

    def _same(self, other: "TruncatedSeries") -> None:
        if (self.nvars, self.cutoff, self.weights) != (other.nvars, other.cutoff, other.weights):
            raise ValueError("series live in different truncated rings")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return TruncatedSeries(self.nvars, self.cutoff, out, self.weights)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.nvars, self.cutoff, {e: -c for e, c in self._terms.items()}, self.weights)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.nvars, self.cutoff,
                                   {e: c * other for e, c in self._terms.items()}, self.weights)
        self._same(other)
        out: dict[Exps, object] = {}
        cutoff = self.cutoff
        right = [(e, c, other.weight(e)) for e, c in other._terms.items()]
        for e1, c1 in self._terms.items():
            w1 = self.weight(e1)
            for e2, c2, w2 in right:
                if w1 + w2 > cutoff:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return TruncatedSeries(self.nvars, self.cutoff, out, self.weights)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        const = self._terms.get((0,) * self.nvars, 0)
        if not const:
            raise ZeroDivisionError("inverse of a series with zero constant term")
        rest = {e: c for e, c in self._terms.items() if any(e)}
        if any(self.weight(e) <= 0 for e in rest):
            raise ValueError("inverse needs every non-constant term to have positive weight")
        # 1/(c(1 + u)) = (1/c) * sum (-u)^k, where u = rest/c has weight >= 1
        u = TruncatedSeries(self.nvars, self.cutoff, {e: -Fraction(c) / const for e, c in rest.items()}, self.weights)
        total = TruncatedSeries.one(self.nvars, self.cutoff, self.weights)
        power = total
        for _ in range(self.cutoff):
            power = power * u
            if not power:
                break
            total = total + power
        return total * Fraction(1, 1) * (Fraction(1) / const)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.nvars, self.cutoff, self.weights, self._terms) == \
            (other.nvars, other.cutoff, other.weights, other._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __getitem__(self, exps: Sequence[int]):
        return self._terms.get(tuple(exps), 0)

    def items(self) -> list[tuple[Exps, object]]:
        return sorted(self._terms.items())

    @property
    def terms(self) -> dict[Exps, object]:
        return dict(self._terms)

    def __repr__(self) -> str:
        return f"TruncatedSeries(nvars={self.nvars}, cutoff={self.cutoff}, terms={dict(self.items())})"


def compare(lhs: TruncatedSeries, rhs: TruncatedSeries) -> Optional[dict]:
    """The smallest exponent vector where the two series differ, or None."""
    for e in sorted(set(lhs.terms) | set(rhs.terms)):
        if lhs[e] != rhs[e]:
            return {"exponent": list(e), "lhs": lhs[e], "rhs": rhs[e]}
    return None


def _compare_into(report: Report, lhs: TruncatedSeries, rhs: TruncatedSeries, **context) -> None:
    report.lhs_terms += len(lhs)
    report.rhs_terms += len(rhs)
    diff = compare(lhs, rhs)
    if diff is not None:
        report.fail({**context, **diff})


def iota(z_series: TruncatedSeries, n: int) -> TruncatedSeries:
    """``z^lam -> q^{lam'}`` term by term, into n q-variables."""
    out: dict[Exps, object] = {}
    for exps, c in z_series.terms.items():
        if not is_partition(exps):
            raise ValueError(f"iota: exponent vector {exps} is not a partition")
        conj = conjugate(exps)
        if len(conj) > n:
            raise ValueError(f"iota: conjugate {conj} has more than {n} parts")
        key = conj + (0,) * (n - len(conj))
        out[key] = out.get(key, 0) + c
    return TruncatedSeries(n, z_series.cutoff, out)


def multinomial(n: int, lam: Sequence[int]) -> int:
    """Number of monomials in n variables with exponent partition ``lam``."""
    parts = [p for p in lam if p > 0]
    if len(parts) > n:
        raise ValueError(f"multinomial: {tuple(lam)} has more than {n} parts")
    counts = Counter(parts)
    counts[0] = n - len(parts)
    out = factorial(n)
    for m in counts.values():
        out //= factorial(m)
    return out


def q_int(i: int) -> IntPolynomial:
    """``[i]_q = 1 + q + ... + q^(i-1)`` as a one-variable polynomial."""
    return IntPolynomial(1, {(k,): 1 for k in range(i)})


def _prefix(n: int, i: int, power: int = 1) -> Exps:
    """Exponent vector of ``(q_1 ... q_i)^power``."""
    return tuple(power if j < i else 0 for j in range(n))


def partition_product(n: int, cutoff: int, power: int = 1) -> TruncatedSeries:
    """``prod_{i=1..n} 1 / (1 - (q_1 ... q_i)^power)``."""
    out = TruncatedSeries.one(n, cutoff)
    for i in range(1, n + 1):
        out = out * TruncatedSeries.geometric(_prefix(n, i, power), cutoff)
    return out


def partition_series(n: int, cutoff: int, coeff: Callable = None) -> TruncatedSeries:
    """``sum coeff(lam) q^lam`` over partitions with at most n parts (default coeff 1)."""
    terms = {}
    for lam in partitions_in_box(n, cutoff):
        terms[lam + (0,) * (n - len(lam))] = 1 if coeff is None else coeff(lam)
    return TruncatedSeries(n, cutoff, terms)


def _check_cutoff(cutoff: int, bound: int, what: str) -> None:
    if cutoff < 0:
        raise ValueError(f"{what}: cutoff must be nonnegative")
    if cutoff > bound:
        raise CapacityError(f"{what}: cutoff {cutoff} exceeds the desk bound {bound}")


def _z_term(entries: Iterable[int], cutoff: int) -> Exps:
    """``(m_{>1}, ..., m_{>cutoff})``: the z-exponents contributed by a filling."""
    entries = list(entries)
    return tuple(sum(1 for v in entries if v > i) for i in range(1, cutoff + 1))


def verify_lemma_tau(lam: Sequence[int], cutoff: int) -> Report:
    """iota[s_lam(1, z1, z1 z2, ...)] against sum_T q^{d(T)} / prod(1 - q1...qi)."""
    lam = partition(lam)
    n = sum(lam)
    report = Report("lemma-tau", {"shape": list(lam), "cutoff": cutoff})
    with timed(report):
        check_n(n, 6, "verify_lemma_tau")
        _check_cutoff(cutoff, MAX_CUTOFF, "verify_lemma_tau")
        z_terms: dict[Exps, int] = {}
        count = 0
        for T in enumerate_RSSYT(lam, cutoff + 1, max_degree=cutoff):
            key = _z_term((v for row in T.rows for v in row), cutoff)
            z_terms[key] = z_terms.get(key, 0) + 1
            count += 1
        lhs = iota(TruncatedSeries(cutoff, cutoff, z_terms), n)
        numerator = {}
        for T in enumerate_SYT(lam):
            numerator[T.d_vector] = numerator.get(T.d_vector, 0) + 1
        rhs = TruncatedSeries(n, cutoff, numerator) * partition_product(n, cutoff)
        report.counts = {"rssyt": count, "syt": sum(numerator.values())}
        _compare_into(report, lhs, rhs)
    return report


def verify_lemma_tau_B(lam1: Sequence[int], lam2: Sequence[int], cutoff: int) -> Report:
    """The two-alphabet version with x = (1, z1 z2, ...), y = (z1, z1 z2 z3, ...)."""
    lam1, lam2 = partition(lam1), partition(lam2)
    n = sum(lam1) + sum(lam2)
    report = Report("lemma-tau-b", {"shape": list(lam1), "shape2": list(lam2), "cutoff": cutoff})
    with timed(report):
        check_n(n, 4, "verify_lemma_tau_B")
        _check_cutoff(cutoff, MAX_CUTOFF, "verify_lemma_tau_B")
        z_terms: dict[Exps, int] = {}
        count = 0
        for T in enumerate_RSSYT_B(lam1, lam2, cutoff + 1, max_degree=cutoff):
            entries = [v for rows in (T.first, T.second) for row in rows for v in row]
            key = _z_term(entries, cutoff)
            z_terms[key] = z_terms.get(key, 0) + 1
            count += 1
        lhs = iota(TruncatedSeries(cutoff, cutoff, z_terms), n) if n else TruncatedSeries.one(0, cutoff)
        numerator = {}
        for T in enumerate_SYT_bi(lam1, lam2):
            numerator[T.f_vector] = numerator.get(T.f_vector, 0) + 1
        rhs = TruncatedSeries(n, cutoff, numerator) * partition_product(n, cutoff, power=2)
        report.counts = {"rssyt": count, "syt": sum(numerator.values())}
        _compare_into(report, lhs, rhs)
    return report


def _hilbert_lhs(n: int, cutoff: int) -> TruncatedSeries:
    return partition_series(n, cutoff, lambda lam: multinomial(n, lam))


def _check_thm(n: int, cutoff: int, what: str) -> None:
    if n < 1:
        raise ValueError(f"{what}: n must be positive")
    check_n(n, 4, what)
    _check_cutoff(cutoff, MAX_CUTOFF, what)


def verify_thm_7_2(n: int, cutoff: int) -> Report:
    report = Report("thm7.2", {"n": n, "cutoff": cutoff})
    with timed(report):
        _check_thm(n, cutoff, "verify_thm_7_2")
        numerator = Counter(perm_stats(pi.window).d_vector for pi in enumerate_group("A", n))
        rhs = TruncatedSeries(n, cutoff, numerator) * partition_product(n, cutoff)
        report.counts = {"elements": sum(numerator.values())}
        _compare_into(report, _hilbert_lhs(n, cutoff), rhs)
    return report


def verify_thm_7_3(n: int, cutoff: int) -> Report:
    report = Report("thm7.3", {"n": n, "cutoff": cutoff})
    with timed(report):
        _check_thm(n, cutoff, "verify_thm_7_3")
        numerator = Counter(signed_stats(s).f_vector for s in enumerate_group("B", n))
        rhs = TruncatedSeries(n, cutoff, numerator) * partition_product(n, cutoff, power=2)
        report.counts = {"elements": sum(numerator.values())}
        _compare_into(report, _hilbert_lhs(n, cutoff), rhs)
    return report


def _d_plus_neg_inverse(s: SignedPermutation) -> Exps:
    d = signed_stats(s).d_vector
    ninv = signed_stats(s.inverse()).n_vector
    return tuple(a + b for a, b in zip(d, ninv))


def verify_thm_7_4(n: int, cutoff: int) -> Report:
    report = Report("thm7.4", {"n": n, "cutoff": cutoff})
    with timed(report):
        _check_thm(n, cutoff, "verify_thm_7_4")
        numerator = Counter(_d_plus_neg_inverse(s) for s in enumerate_group("B", n))
        rhs = TruncatedSeries(n, cutoff, numerator) * partition_product(n, cutoff, power=2)
        report.counts = {"elements": sum(numerator.values())}
        _compare_into(report, _hilbert_lhs(n, cutoff), rhs)
    return report


def verify_thm_7_1(n: int) -> Report:
    """Exact polynomial identity: sum q^{d + n(sigma^-1)} = sum q^{f} over B_n."""
    report = Report("thm7.1", {"n": n})
    with timed(report):
        if n < 1:
            raise ValueError("verify_thm_7_1: n must be positive")
        check_n(n, 5, "verify_thm_7_1")
        lhs = Counter()
        rhs = Counter()
        for s in enumerate_group("B", n):
            lhs[_d_plus_neg_inverse(s)] += 1
            rhs[signed_stats(s).f_vector] += 1
        report.counts = {"elements": sum(lhs.values()) + sum(rhs.values())}
        big = 2 * n * n
        _compare_into(report, TruncatedSeries(n, big, lhs), TruncatedSeries(n, big, rhs))
    return report


def verify_cor_gessel(n: int, r_max: int) -> Report:
    """Coefficient of t^r in sum t^des q^maj / prod_{i=0..n} (1 - t q^i) equals [r+1]_q^n."""
    report = Report("cor-gessel", {"n": n, "r_max": r_max})
    with timed(report):
        if n < 1:
            raise ValueError("verify_cor_gessel: n must be positive")
        check_n(n, 5, "verify_cor_gessel")
        _check_cutoff(r_max, 6, "verify_cor_gessel")
        weights = (1, 0)
        numerator = Counter()
        for pi in enumerate_group("A", n):
            st = perm_stats(pi.window)
            numerator[(st.des, st.maj)] += 1
        series = TruncatedSeries(2, r_max, numerator, weights)
        for i in range(n + 1):
            series = series * TruncatedSeries.geometric((1, i), r_max, weights=weights)
        for r in range(r_max + 1):
            got = IntPolynomial(1, {(e[1],): c for e, c in series.terms.items() if e[0] == r})
            want = q_int(r + 1) ** n
            report.lhs_terms += len(got)
            report.rhs_terms += len(want)
            if got != want:
                first = min(set(got.terms) | set(want.terms), key=lambda e: (got[e] == want[e], e))
                report.fail({"r": r, "exponent": list(first), "lhs": got[first], "rhs": want[first]})
        report.counts = {"elements": sum(numerator.values())}
    return report


def verify_cor_abr(n: int) -> Report:
    """(ndes, nmaj) and (fdes, fmaj) are equidistributed over B_n."""
    report = Report("cor-abr", {"n": n})
    with timed(report):
        if n < 1:
            raise ValueError("verify_cor_abr: n must be positive")
        check_n(n, 5, "verify_cor_abr")
        lhs = Counter()
        rhs = Counter()
        for s in enumerate_group("B", n):
            st = signed_stats(s)
            lhs[(st.ndes, st.nmaj)] += 1
            rhs[(st.fdes, st.fmaj)] += 1
        report.counts = {"elements": sum(lhs.values()) + sum(rhs.values())}
        big = 4 * n * n
        _compare_into(report, TruncatedSeries(2, big, lhs), TruncatedSeries(2, big, rhs))
    return report


def power_sum_z(k: int, cutoff: int) -> TruncatedSeries:
    """``p_k(1, z1, z1 z2, ...)`` in the z-alphabet of length ``cutoff``."""
    terms = {}
    t = 0
    while t * k <= cutoff and t <= cutoff:
        terms[tuple(k if j < t else 0 for j in range(cutoff))] = 1
        t += 1
    return TruncatedSeries(cutoff, cutoff, terms)


def power_sum_z_B(k: int, cutoff: int, sign: int) -> TruncatedSeries:
    """``p_k(x) + sign * p_k(y)`` with x = (1, z1 z2, ...), y = (z1, z1 z2 z3, ...).

    Term t of the sum is ``(z1 ... zt)^k``; odd t come from y.
    """
    terms = {}
    t = 0
    while t * k <= cutoff and t <= cutoff:
        terms[tuple(k if j < t else 0 for j in range(cutoff))] = sign ** (t % 2)
        t += 1
    return TruncatedSeries(cutoff, cutoff, terms)


def trace_on_polynomials(tau, cutoff: int) -> TruncatedSeries:
    """``sum_m <tau(m), m> q^{lambda(m)}`` over monomials of degree <= cutoff."""
    n = tau.n
    terms: dict[Exps, int] = {}
    for degree in range(cutoff + 1):
        for m in monomials_of_degree(n, degree):
            image, sign = _act_monomial(tau, m)
            if image == m:
                lam = exponent_partition(m)
                terms[lam] = terms.get(lam, 0) + sign
    return TruncatedSeries(n, cutoff, terms)


def verify_trace_claims(n: int, cutoff: int = 6, kind: str = "A") -> Report:
    """For every group element: direct trace = iota[power sum] = graded trace * partition series."""
    report = Report("traces", {"n": n, "cutoff": cutoff, "type": kind})
    with timed(report):
        if kind not in ("A", "B"):
            raise ValueError(f"unknown type {kind!r}")
        if n < 1:
            raise ValueError("verify_trace_claims: n must be positive")
        check_n(n, 3, "verify_trace_claims")
        _check_cutoff(cutoff, 6, "verify_trace_claims")
        power = 1 if kind == "A" else 2
        denominator = partition_product(n, cutoff, power=power)
        elements = 0
        for tau in enumerate_group(kind, n):
            elements += 1
            direct = trace_on_polynomials(tau, cutoff)
            z = TruncatedSeries.one(cutoff, cutoff)
            if kind == "A":
                for k in cycle_type(tau):
                    z = z * power_sum_z(k, cutoff)
            else:
                pos, neg = signed_cycle_type(tau)
                for k in pos:
                    z = z * power_sum_z_B(k, cutoff, +1)
                for k in neg:
                    z = z * power_sum_z_B(k, cutoff, -1)
            via_iota = iota(z, n)
            factored = TruncatedSeries.from_polynomial(graded_trace(tau, kind), cutoff) * denominator
            _compare_into(report, direct, via_iota, element=str(tau), check="iota")
            _compare_into(report, direct, factored, element=str(tau), check="factorization")
        report.counts = {"elements": elements}
    return report


def verify_partition_product(n: int, cutoff: int) -> Report:
    """Partitions with at most n parts: sum q^lam = prod 1 / (1 - q_1 ... q_i)."""
    report = Report("partition-product", {"n": n, "cutoff": cutoff})
    with timed(report):
        check_n(n, 5, "verify_partition_product")
        _check_cutoff(cutoff, 10, "verify_partition_product")
        _compare_into(report, partition_series(n, cutoff), partition_product(n, cutoff))
    return report


def verify_monomial_bijection(kind: str, n: int, max_degree: int) -> Report:
    """``m -> (pi(m), mu(m)')`` (type B: ``(sigma(m), mu_B(m)')``) is injective, hits every
    pair in range, and ``lambda(m) = lambda(basis) + mu'`` (type B: ``+ 2 mu_B'``)."""
    report = Report("monomial-bijection", {"type": kind, "n": n, "max_degree": max_degree})
    with timed(report):
        check_n(n, 4, "verify_monomial_bijection")
        seen = {}
        for degree in range(max_degree + 1):
            for m in monomials_of_degree(n, degree):
                if kind == "A":
                    an = analyze_A(m)
                    g, mu, lam = an.index_perm, an.complementary, an.exponent_partition
                    base = perm_stats(g.window).d_vector
                    scale = 1
                else:
                    bn = analyze_B(m)
                    g, mu, lam = bn.signed_index_perm, bn.complementary_B, bn.exponent_partition
                    base = tuple(sorted(signed_stats(g).f_vector, reverse=True))
                    scale = 2
                mu_conj = conjugate(mu)
                if len(mu_conj) > n:
                    report.fail({"monomial": list(m), "reason": "mu' has more than n parts"})
                padded = mu_conj + (0,) * (n - len(mu_conj))
                key = (g, padded)
                if key in seen:
                    report.fail({"monomial": list(m), "collides_with": list(seen[key])})
                seen[key] = m
                if kind == "A" and tuple(b + p for b, p in zip(base, padded)) != lam:
                    report.fail({"monomial": list(m), "reason": "lambda(m) != lambda(a_pi) + mu'"})
                if kind == "B" and sorted(lam, reverse=True) != sorted(
                        (b + scale * p for b, p in zip(signed_stats(g).f_vector, padded)), reverse=True):
                    report.fail({"monomial": list(m), "reason": "lambda(m) != lambda(b_sigma) + 2 mu_B'"})
        report.counts = {"monomials": len(seen)}
        # surjectivity onto the bounded range: count pairs whose image degree fits
        elements = list(enumerate_group(kind, n))
        expected = 0
        for g in elements:
            base_deg = sum(perm_stats(g.window).d_vector) if kind == "A" else signed_stats(g).fmaj
            for mu_conj in partitions_in_box(n, max_degree):
                if base_deg + (1 if kind == "A" else 2) * sum(mu_conj) <= max_degree:
                    expected += 1
        report.lhs_terms, report.rhs_terms = len(seen), expected
        if expected != len(seen):
            report.fail({"reason": "pair count mismatch", "monomials": len(seen), "pairs": expected})
    return report


def verify_descent_free_factor(n: int) -> Report:
    """sum over sigma with des(sigma)=0 of q^{n(sigma^-1)} = prod (1 + q_1 ... q_i)."""
    report = Report("descent-free-factor", {"n": n})
    with timed(report):
        check_n(n, 5, "verify_descent_free_factor")
        lhs = Counter(signed_stats(s.inverse()).n_vector
                      for s in enumerate_group("B", n) if not perm_stats(s.window).des_set)
        rhs = IntPolynomial.one(n)
        for i in range(1, n + 1):
            rhs = rhs * (IntPolynomial.one(n) + IntPolynomial.monomial(_prefix(n, i)))
        big = n * n
        _compare_into(report, TruncatedSeries(n, big, lhs), TruncatedSeries.from_polynomial(rhs, big))
    return report
