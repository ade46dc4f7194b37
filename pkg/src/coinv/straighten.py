"""Straightening in the (signed) descent basis and normal forms in the coinvariant algebras.

Every monomial ``m`` with complementary partition ``mu != ()`` is reduced with
one elementary step: with ``k = mu[0]`` the monomial
``m'' = m / (x_{pi(1)} ... x_{pi(k)})`` satisfies ``m'' * e_k = m + (terms ≺ m)``.
Expansions are unique (the descent basis is a basis of P_n over the
symmetric polynomials), so reducing one part of ``mu`` at a time reproduces
the full ``a_pi * e_mu`` algorithm term for term.

Type B is the same routine over the squared alphabet, with ``pi`` replaced by
the signed index permutation and ``a_pi`` by ``b_sigma``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence, Union

from coinv._limits import CapacityError, check_n
from coinv.groups import (
    GroupElement, Permutation, SignedPermutation, enumerate_group,
)
from coinv.polyring import (
    IntPolynomial, Monomial, act, analyze_A, analyze_B, descent_monomial,
    elementary, signed_descent_monomial, sym_basis, exponent_partition,
)
from coinv.shapes import Cmp, dominance_cmp

__all__ = [
    "StraighteningExpansion", "QuotientVector", "straighten_step", "straighten",
    "normal_form", "graded_trace", "triangularity_check", "basis", "basis_monomial",
    "clear_caches", "MAX_N", "MAX_DEGREE",
]

MAX_N = {"A": 7, "B": 5}
MAX_DEGREE = 10

Window = tuple[int, ...]
Term = tuple[int, tuple[int, ...], GroupElement]


def _kind(kind: str) -> str:
    if kind not in ("A", "B"):
        raise ValueError(f"unknown type {kind!r}; expected 'A' or 'B'")
    return kind


def _element(kind: str, window: Window) -> GroupElement:
    return Permutation(window) if kind == "A" else SignedPermutation(window)


def basis_monomial(g: GroupElement) -> Monomial:
    """``a_pi`` for a permutation, ``b_sigma`` for a signed permutation."""
    if isinstance(g, SignedPermutation):
        return signed_descent_monomial(g)
    return descent_monomial(g)


def basis(kind: str, n: int) -> list[tuple[GroupElement, Monomial]]:
    """The (signed) descent basis as (element, monomial) pairs in lex order."""
    return [(g, basis_monomial(g)) for g in enumerate_group(_kind(kind), n)]


@dataclass(frozen=True)
class StraighteningExpansion:
    """``target = sum coeff * e_mu * a_pi`` (type A) or ``sum coeff * e_mu(x^2) * b_sigma`` (type B)."""

    target: Monomial
    terms: tuple[Term, ...]
    kind: str

    def expand(self) -> IntPolynomial:
        n = len(self.target)
        total = IntPolynomial.zero(n)
        for coeff, mu, g in self.terms:
            e_mu = sym_basis("e", mu, n, squared=self.kind == "B")
            total = total + e_mu * IntPolynomial.monomial(basis_monomial(g), coeff)
        return total

    def leading_term(self) -> Term:
        if self.kind == "A":
            an = analyze_A(self.target)
            key = (an.complementary, an.index_perm)
        else:
            bn = analyze_B(self.target)
            key = (bn.complementary_B, bn.signed_index_perm)
        for t in self.terms:
            if (t[1], t[2]) == key:
                return t
        raise AssertionError(f"leading term {key} missing from the expansion of {self.target}")

    def to_json(self) -> dict:
        from coinv.groups import format_window
        from coinv.polyring import format_monomial
        from coinv.shapes import format_partition
        return {
            "target": format_monomial(self.target),
            "type": self.kind,
            "terms": [
                {"coeff": c, "mu": format_partition(mu), "perm": format_window(g.window)}
                for c, mu, g in self.terms
            ],
        }


@dataclass(frozen=True)
class QuotientVector:
    """Coordinates of a homogeneous class of P_n/I_n (or P_n/I_n^B) in the descent basis."""

    kind: str
    n: int
    degree: int
    coeffs: Mapping[GroupElement, int]

    def __getitem__(self, g: GroupElement) -> int:
        return self.coeffs.get(g, 0)

    def support(self) -> list[GroupElement]:
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_polynomial(self) -> IntPolynomial:
        """The representative ``sum coeff * basis_monomial``."""
        return IntPolynomial(self.n, {basis_monomial(g): c for g, c in self.coeffs.items()})


def _lead_factor(kind: str, m: Monomial, k: int) -> Monomial:
    """Exponent vector of ``x_{pi(1)} ... x_{pi(k)}`` (squared along |sigma| for type B)."""
    n = len(m)
    exps = [0] * n
    if kind == "A":
        for i in analyze_A(m).index_perm.window[:k]:
            exps[i - 1] = 1
    else:
        for a in analyze_B(m).signed_index_perm.window[:k]:
            exps[abs(a) - 1] = 2
    return tuple(exps)


def straighten_step(m: Sequence[int], k: int, kind: str = "A") -> tuple[Monomial, dict[Monomial, int]]:
    """Split ``m * e_k`` (or ``m * e_k(x^2)``) into its ≺-maximal monomial and the rest."""
    m = tuple(m)
    kind = _kind(kind)
    n = len(m)
    if not 1 <= k <= n:
        raise ValueError(f"straighten_step: k={k} outside 1..{n}")
    top = tuple(a + b for a, b in zip(m, _lead_factor(kind, m, k)))
    product = IntPolynomial.monomial(m) * elementary(k, n, squared=kind == "B")
    rest = {mono: c for mono, c in product.terms.items() if mono != top}
    if product[top] != 1:
        raise AssertionError(f"straighten_step: {top} is not a simple term of m*e_k")
    return top, rest


# Per-type memo tables.  Keys are monomials; the tuple length fixes the ambient n.
_PLANS: dict[str, dict[Monomial, tuple]] = {"A": {}, "B": {}}
_EXPANSIONS: dict[str, dict[Monomial, dict]] = {"A": {}, "B": {}}
_NORMAL: dict[str, dict[Monomial, dict]] = {"A": {}, "B": {}}


def clear_caches() -> None:
    for table in (_PLANS, _EXPANSIONS, _NORMAL):
        for memo in table.values():
            memo.clear()


def _plan(kind: str, m: Monomial) -> tuple:
    """``(window, ())`` for a basis monomial, else ``(window, mu, k, lower, rest)``."""
    plans = _PLANS[kind]
    plan = plans.get(m)
    if plan is not None:
        return plan
    if kind == "A":
        an = analyze_A(m)
        window, mu = an.index_perm.window, an.complementary
    else:
        bn = analyze_B(m)
        window, mu = bn.signed_index_perm.window, bn.complementary_B
    if not mu:
        plan = (window, mu)
    else:
        k = mu[0]
        lower = tuple(a - b for a, b in zip(m, _lead_factor(kind, m, k)))
        top, rest = straighten_step(lower, k, kind)
        if top != m:
            raise AssertionError(f"straightening step for {m} produced leading monomial {top}")
        plan = (window, mu, k, lower, tuple(sorted(rest.items(), reverse=True)))
    plans[m] = plan
    return plan


def _solve(kind: str, root: Monomial, memo: dict, deps: Callable, combine: Callable) -> dict:
    """Fill ``memo`` bottom-up without recursion (≺-chains can be long)."""
    stack = [root]
    while stack:
        m = stack[-1]
        if m in memo:
            stack.pop()
            continue
        plan = _plan(kind, m)
        missing = [d for d in deps(plan) if d not in memo]
        if missing:
            stack.extend(missing)
            continue
        memo[m] = combine(plan)
        stack.pop()
    return memo[root]


def _merge_sorted_mu(mu: tuple[int, ...], k: int) -> tuple[int, ...]:
    return tuple(sorted(mu + (k,), reverse=True))


def _expansion(kind: str, m: Monomial) -> dict:
    memo = _EXPANSIONS[kind]

    def deps(plan):
        if len(plan) == 2:
            return ()
        return (plan[3],) + tuple(mono for mono, _ in plan[4])

    def combine(plan):
        if len(plan) == 2:
            return {((), plan[0]): 1}
        _, _, k, lower, rest = plan
        out = {(_merge_sorted_mu(mu, k), w): c for (mu, w), c in memo[lower].items()}
        for mono, c in rest:
            for key, v in memo[mono].items():
                out[key] = out.get(key, 0) - c * v
        return {key: v for key, v in out.items() if v}

    return _solve(kind, m, memo, deps, combine)


def _normal(kind: str, m: Monomial) -> dict:
    memo = _NORMAL[kind]

    def deps(plan):
        if len(plan) == 2:
            return ()
        return tuple(mono for mono, _ in plan[4])

    def combine(plan):
        if len(plan) == 2:
            return {plan[0]: 1}
        # m = lower * e_k - rest and lower * e_k lies in the invariant ideal
        out: dict = {}
        for mono, c in plan[4]:
            for w, v in memo[mono].items():
                out[w] = out.get(w, 0) - c * v
        return {w: v for w, v in out.items() if v}

    return _solve(kind, m, memo, deps, combine)


def _check_bounds(kind: str, m: Monomial, what: str, max_degree: int) -> None:
    check_n(len(m), MAX_N[kind], what)
    if sum(m) > max_degree:
        raise CapacityError(f"{what}: degree {sum(m)} exceeds the desk bound {max_degree}")


def straighten(m: Sequence[int], kind: str = "A") -> StraighteningExpansion:
    """Expand a monomial as ``sum coeff * e_mu * a_pi`` (type B: ``e_mu(x^2) * b_sigma``)."""
    m = tuple(m)
    kind = _kind(kind)
    if any(e < 0 for e in m) or not m:
        raise ValueError(f"straighten: {m} is not an exponent vector")
    _check_bounds(kind, m, f"straighten({kind})", MAX_DEGREE)
    raw = _expansion(kind, m)
    terms = tuple(
        (c, mu, _element(kind, w))
        for (mu, w), c in sorted(raw.items(), key=lambda item: (tuple(-p for p in item[0][0]), item[0][1]))
    )
    return StraighteningExpansion(m, terms, kind)


def _normal_form_degree_bound(kind: str, n: int) -> int:
    top = n * (n - 1) // 2 if kind == "A" else n * n
    return max(MAX_DEGREE, top)


def normal_form(p: Union[IntPolynomial, Sequence[int]], kind: str = "A") -> QuotientVector:
    """Coordinates of ``p`` modulo the invariant ideal in the (signed) descent basis."""
    kind = _kind(kind)
    if not isinstance(p, IntPolynomial):
        p = IntPolynomial.monomial(tuple(p))
    if not p.is_homogeneous():
        raise ValueError(f"normal_form: input is not homogeneous (degrees {sorted(p.degrees())})")
    degree = next(iter(p.degrees()), 0)
    coeffs: dict[Window, int] = {}
    for m, c in p.terms.items():
        _check_bounds(kind, m, f"normal_form({kind})", _normal_form_degree_bound(kind, p.n))
        for w, v in _normal(kind, m).items():
            coeffs[w] = coeffs.get(w, 0) + c * v
    return QuotientVector(kind, p.n, degree, {_element(kind, w): v for w, v in sorted(coeffs.items()) if v})


def graded_trace(tau: GroupElement, kind: str = None) -> IntPolynomial:
    """``sum_w <tau(basis_w), basis_w> q^{lambda(basis_w)}`` as a polynomial in q_1..q_n."""
    if kind is None:
        kind = "B" if isinstance(tau, SignedPermutation) else "A"
    kind = _kind(kind)
    n = tau.n
    check_n(n, {"A": 6, "B": 4}[kind], f"graded_trace({kind})")
    out: dict[Monomial, int] = {}
    for g, mono in basis(kind, n):
        diag = normal_form(act(tau, mono), kind)[g]
        if diag:
            lam = exponent_partition(mono)
            out[lam] = out.get(lam, 0) + diag
    return IntPolynomial(n, out)


def triangularity_check(tau: GroupElement, g: GroupElement) -> bool:
    """True iff ``tau(basis_g)`` only involves basis elements whose exponent partition
    is dominated by that of ``basis_g``."""
    kind = "B" if isinstance(g, SignedPermutation) else "A"
    mono = basis_monomial(g)
    lam = exponent_partition(mono)
    nf = normal_form(act(tau, mono), kind)
    return all(
        dominance_cmp(exponent_partition(basis_monomial(w)), lam) in (Cmp.LESS, Cmp.EQUAL)
        for w in nf.support()
    )
