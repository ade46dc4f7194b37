"""Exact polynomials in x_1..x_n and the monomial combinatorics behind straightening.

A monomial is a tuple of ``n`` nonnegative exponents; its length is the
ambient number of variables.  :class:`IntPolynomial` maps monomials to nonzero
integer coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Mapping, Optional, Sequence, Union

from coinv.groups import (
    GroupElement, Permutation, SignedPermutation, perm_stats, signed_stats,
)
from coinv.shapes import Cmp, conjugate, dominance_cmp, partition

__all__ = [
    "Monomial", "IntPolynomial", "MonomialAnalysis", "SignedMonomialAnalysis",
    "analyze_A", "analyze_B", "descent_monomial", "signed_descent_monomial",
    "exponent_partition", "elementary", "power_sum", "schur", "schur_via_rssyt",
    "sym_basis", "cmp_A", "cmp_B", "act", "monomials_of_degree",
    "parse_monomial", "format_monomial", "parse_polynomial", "format_polynomial",
]

Monomial = tuple[int, ...]


class IntPolynomial:
    """Sparse polynomial with exact integer (or rational) coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Optional[Mapping[Monomial, int]] = None):
        self.n = n
        clean: dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n:
                raise ValueError(f"monomial {mono} does not live in {n} variables")
            if c:
                clean[mono] = clean.get(mono, 0) + c
        self._terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def monomial(cls, mono: Sequence[int], coeff: int = 1) -> "IntPolynomial":
        return cls(len(mono), {tuple(mono): coeff})

    @classmethod
    def one(cls, n: int) -> "IntPolynomial":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def zero(cls, n: int) -> "IntPolynomial":
        return cls(n)

    @classmethod
    def variable(cls, i: int, n: int) -> "IntPolynomial":
        exps = [0] * n
        exps[i - 1] = 1
        return cls(n, {tuple(exps): 1})

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(sorted(self._terms))

    def __getitem__(self, mono: Sequence[int]) -> int:
        return self._terms.get(tuple(mono), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: "IntPolynomial") -> None:
        if self.n != other.n:
            raise ValueError(f"ambient size mismatch: {self.n} vs {other.n}")

    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            self._check(other)
            return other
        return IntPolynomial(self.n, {(0,) * self.n: other})

    def __add__(self, other) -> "IntPolynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return IntPolynomial(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "IntPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "IntPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return IntPolynomial(self.n, {m: c * other for m, c in self._terms.items()})
        self._check(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return IntPolynomial(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        result = IntPolynomial.one(self.n)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, int):
            return self == IntPolynomial(self.n, {(0,) * self.n: other})
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def degrees(self) -> set[int]:
        return {sum(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def substitute(self, values: Sequence) -> "IntPolynomial":
        """Evaluate numerically; ``values[i]`` replaces ``x_{i+1}``."""
        total = 0
        for m, c in self._terms.items():
            term = c
            for v, e in zip(values, m):
                term = term * v ** e
            total = total + term
        return total

    def __repr__(self) -> str:
        if not self._terms:
            return f"IntPolynomial({self.n}, 0)"
        return f"IntPolynomial({self.n}, {dict(self.items())})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in sorted(self._terms.items(), reverse=True):
            factors = "*".join(f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m, start=1) if e)
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append(factors)
            elif c == -1:
                parts.append("-" + factors)
            else:
                parts.append(f"{c}*{factors}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class MonomialAnalysis:
    index_perm: Permutation
    exponent_partition: tuple[int, ...]
    complementary: tuple[int, ...]
    gaps: tuple[int, ...]


@dataclass(frozen=True)
class SignedMonomialAnalysis:
    signed_index_perm: SignedPermutation
    exponent_partition: tuple[int, ...]
    complementary_B: tuple[int, ...]
    half_gaps: tuple[int, ...]


def exponent_partition(m: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(m, reverse=True))


@lru_cache(maxsize=None)
def analyze_A(m: Monomial) -> MonomialAnalysis:
    """Index permutation, exponent partition and complementary partition of ``m``."""
    m = tuple(m)
    n = len(m)
    order = sorted(range(1, n + 1), key=lambda i: (-m[i - 1], i))
    pi = Permutation(tuple(order))
    d = perm_stats(order).d_vector
    gaps = tuple(m[order[i] - 1] - d[i] for i in range(n))
    return MonomialAnalysis(pi, tuple(m[i - 1] for i in order), conjugate(gaps), gaps)


@lru_cache(maxsize=None)
def analyze_B(m: Monomial) -> SignedMonomialAnalysis:
    """Signed index permutation and type-B complementary partition of ``m``."""
    m = tuple(m)
    n = len(m)
    signed = [i if m[i - 1] % 2 == 0 else -i for i in range(1, n + 1)]
    order = sorted(signed, key=lambda a: (-m[abs(a) - 1], a))
    sigma = SignedPermutation(tuple(order))
    f = signed_stats(sigma).f_vector
    gaps = [m[abs(order[i]) - 1] - f[i] for i in range(n)]
    half = tuple(g // 2 for g in gaps)
    return SignedMonomialAnalysis(sigma, tuple(m[abs(a) - 1] for a in order), conjugate(half), half)


def descent_monomial(pi: Permutation) -> Monomial:
    """``a_pi``: the exponent of x_{pi(i)} is d_i(pi)."""
    d = perm_stats(pi.window).d_vector
    exps = [0] * pi.n
    for i, a in enumerate(pi.window):
        exps[a - 1] = d[i]
    return tuple(exps)


def signed_descent_monomial(sigma: SignedPermutation) -> Monomial:
    """``b_sigma``: the exponent of x_{|sigma(i)|} is f_i(sigma)."""
    f = signed_stats(sigma).f_vector
    exps = [0] * sigma.n
    for i, a in enumerate(sigma.window):
        exps[abs(a) - 1] = f[i]
    return tuple(exps)


@lru_cache(maxsize=None)
def _elementary(k: int, n: int, squared: bool) -> IntPolynomial:
    if k > n:
        return IntPolynomial.zero(n)
    step = 2 if squared else 1
    terms = {}
    for idx in combinations(range(n), k):
        exps = [0] * n
        for i in idx:
            exps[i] = step
        terms[tuple(exps)] = 1
    return IntPolynomial(n, terms)


def elementary(k: int, n: int, squared: bool = False) -> IntPolynomial:
    return _elementary(k, n, squared)


@lru_cache(maxsize=None)
def _elementary_product(mu: tuple[int, ...], n: int, squared: bool) -> IntPolynomial:
    if not mu:
        return IntPolynomial.one(n)
    return _elementary_product(mu[1:], n, squared) * _elementary(mu[0], n, squared)


def power_sum(k: int, n: int) -> IntPolynomial:
    terms = {}
    for i in range(n):
        exps = [0] * n
        exps[i] = k
        terms[tuple(exps)] = 1
    return IntPolynomial(n, terms)


def _semistandard_contents(lam: Sequence[int], n: int, increasing: bool) -> Iterator[tuple[int, ...]]:
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    grid = [[0] * length for length in lam]
    content = [0] * n

    def rec(idx):
        if idx == len(cells):
            yield tuple(content)
            return
        r, c = cells[idx]
        for v in range(1, n + 1):
            if increasing:
                if (c > 0 and v < grid[r][c - 1]) or (r > 0 and v <= grid[r - 1][c]):
                    continue
            else:
                if (c > 0 and v > grid[r][c - 1]) or (r > 0 and v >= grid[r - 1][c]):
                    continue
            grid[r][c] = v
            content[v - 1] += 1
            yield from rec(idx + 1)
            content[v - 1] -= 1
        grid[r][c] = 0

    yield from rec(0)


def schur(lam: Sequence[int], n: int) -> IntPolynomial:
    """``s_lam(x_1..x_n)`` summed over semistandard tableaux with entries <= n."""
    lam = partition(lam)
    out: dict[Monomial, int] = {}
    for cont in _semistandard_contents(lam, n, increasing=True):
        out[cont] = out.get(cont, 0) + 1
    return IntPolynomial(n, out) if lam else IntPolynomial.one(n)


def schur_via_rssyt(lam: Sequence[int], n: int) -> IntPolynomial:
    """Same polynomial, summed over reverse semistandard tableaux instead."""
    lam = partition(lam)
    out: dict[Monomial, int] = {}
    for cont in _semistandard_contents(lam, n, increasing=False):
        out[cont] = out.get(cont, 0) + 1
    return IntPolynomial(n, out) if lam else IntPolynomial.one(n)


def sym_basis(kind: str, lam: Sequence[int], n: int, squared: bool = False) -> IntPolynomial:
    """``e_lam``, ``p_lam`` or ``s_lam`` in n variables, optionally in x_i^2."""
    lam = partition(lam)
    if kind == "e":
        poly = _elementary_product(lam, n, False)
    elif kind == "p":
        poly = IntPolynomial.one(n)
        for k in lam:
            poly = poly * power_sum(k, n)
    elif kind == "s":
        poly = schur(lam, n)
    else:
        raise ValueError(f"unknown symmetric basis {kind!r}")
    if squared:
        poly = IntPolynomial(n, {tuple(2 * e for e in m): c for m, c in poly.terms.items()})
    return poly


def _cmp_core(m1: Monomial, m2: Monomial, signed: bool = False) -> Cmp:
    if m1 == m2:
        return Cmp.EQUAL
    dom = dominance_cmp(exponent_partition(m1), exponent_partition(m2))
    if dom is not Cmp.EQUAL:
        return dom
    if signed:
        w1, w2 = analyze_B(m1).signed_index_perm.window, analyze_B(m2).signed_index_perm.window
    else:
        w1, w2 = analyze_A(m1).index_perm.window, analyze_A(m2).index_perm.window
    inv1 = perm_stats(w1).inv
    inv2 = perm_stats(w2).inv
    if inv1 > inv2:
        return Cmp.LESS
    if inv1 < inv2:
        return Cmp.GREATER
    return Cmp.INCOMPARABLE


def _check_pair(m1: Sequence[int], m2: Sequence[int]) -> tuple[Monomial, Monomial]:
    m1, m2 = tuple(m1), tuple(m2)
    if len(m1) != len(m2):
        raise ValueError(f"ambient size mismatch: {len(m1)} vs {len(m2)}")
    if sum(m1) != sum(m2):
        raise ValueError(f"degree mismatch: {sum(m1)} vs {sum(m2)}")
    return m1, m2


def cmp_A(m1: Sequence[int], m2: Sequence[int]) -> Cmp:
    """The order ≺: strict dominance of exponent partitions, then more inversions is smaller."""
    return _cmp_core(*_check_pair(m1, m2))


def cmp_B(m1: Sequence[int], m2: Sequence[int], signed: bool = False) -> Cmp:
    """The order ≺_B: as ≺, but only between monomials with equal exponent parities.

    By default ties in the exponent partition are broken by inversions of the
    unsigned index permutation.  With ``signed=True`` they are broken by
    inversions of the signed index permutation; that is the variant for which
    type-B straightening is triangular (x_2 x_3^5 expands with an
    ``x_2^5 x_3`` term, which the unsigned variant ranks higher).
    """
    m1, m2 = _check_pair(m1, m2)
    if any((a - b) % 2 for a, b in zip(m1, m2)):
        return Cmp.INCOMPARABLE
    return _cmp_core(m1, m2, signed)


def _act_monomial(g: GroupElement, m: Monomial) -> tuple[Monomial, int]:
    exps = [0] * len(m)
    sign = 1
    for i, e in enumerate(m, start=1):
        a = g(i)
        exps[abs(a) - 1] = e
        if a < 0 and e % 2:
            sign = -sign
    return tuple(exps), sign


def act(g: GroupElement, p: Union[IntPolynomial, Sequence[int]]) -> IntPolynomial:
    """``x_i -> x_{g(i)}``; for signed g the image of x_i also carries the sign of g(i)."""
    if not isinstance(p, IntPolynomial):
        p = IntPolynomial.monomial(p)
    if g.n != p.n:
        raise ValueError(f"size mismatch: group of rank {g.n}, polynomial in {p.n} variables")
    out: dict[Monomial, int] = {}
    for m, c in p.terms.items():
        image, sign = _act_monomial(g, m)
        out[image] = out.get(image, 0) + sign * c
    return IntPolynomial(p.n, out)


def monomials_of_degree(n: int, degree: int) -> list[Monomial]:
    """All exponent vectors of length n summing to ``degree``, in lex order."""
    if n == 0:
        return [()] if degree == 0 else []
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(n - 1, degree - first):
            out.append((first,) + rest)
    return out


def _decimal(tok: str) -> int:
    tok = tok.strip()
    if not (tok.isascii() and tok.isdecimal()):
        raise ValueError(f"not a nonnegative decimal integer: {tok!r}")
    return int(tok)


def parse_monomial(text: str) -> Monomial:
    text = text.strip()
    if not text:
        raise ValueError("empty exponent vector")
    return tuple(_decimal(t) for t in text.split(","))


def format_monomial(m: Sequence[int]) -> str:
    return ",".join(str(e) for e in m)


def parse_polynomial(text: str, n: Optional[int] = None) -> IntPolynomial:
    terms: dict[Monomial, int] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        coeff, _, exps = line.partition(":")
        coeff = coeff.strip()
        digits = coeff[1:] if coeff[:1] in "+-" else coeff
        if not (digits.isascii() and digits.isdecimal()):
            raise ValueError(f"bad coefficient {coeff!r}")
        mono = parse_monomial(exps)
        if n is None:
            n = len(mono)
        terms[mono] = terms.get(mono, 0) + int(coeff)
    if n is None:
        raise ValueError("cannot infer the number of variables of an empty polynomial")
    return IntPolynomial(n, terms)


def format_polynomial(p: IntPolynomial) -> str:
    return "\n".join(f"{c}:{format_monomial(m)}" for m, c in p.items())
