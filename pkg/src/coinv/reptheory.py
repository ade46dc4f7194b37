"""Characters of S_n and B_n, and the characters of the descent representations."""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Optional, Union

from coinv._limits import check_n
from coinv.groups import (
    Permutation, SignedPermutation, enumerate_group, perm_stats, signed_cycle_type,
    signed_stats,
)
from coinv.polyring import act
from coinv.shapes import (
    bipartitions_of, enumerate_SYT, enumerate_SYT_bi, format_partition,
    lambda_S1S2, partition, partitions_of,
)
from coinv.straighten import basis_monomial, normal_form

__all__ = [
    "ClassFunction", "ClassTable", "Multiplicity", "class_table", "class_representative",
    "sn_character", "bn_character", "descent_rep_character", "multiplicity",
    "inner_product", "irreducible_labels", "character_table", "character_table_csv",
    "format_label",
]

Label = Union[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]]]


@dataclass(frozen=True)
class ClassTable:
    kind: str
    n: int
    classes: tuple[tuple[Label, int], ...]

    @property
    def order(self) -> int:
        return sum(size for _, size in self.classes)

    def labels(self) -> list[Label]:
        return [label for label, _ in self.classes]

    def size(self, label: Label) -> int:
        return dict(self.classes)[label]


@dataclass(frozen=True)
class ClassFunction:
    kind: str
    n: int
    values: dict

    def __getitem__(self, label: Label) -> Fraction:
        return self.values[label]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if (self.kind, self.n) != (other.kind, other.n):
            raise ValueError("class functions live on different groups")
        return ClassFunction(self.kind, self.n, {k: v + other.values[k] for k, v in self.values.items()})


def _check_kind(kind: str) -> None:
    if kind not in ("A", "B"):
        raise ValueError(f"unknown type {kind!r}")


@lru_cache(maxsize=None)
def class_table(kind: str, n: int) -> ClassTable:
    _check_kind(kind)
    if kind == "A":
        check_n(n, 8, "class_table(A)")
        rows = []
        for mu in partitions_of(n):
            mult = Counter(mu)
            z = prod(j ** m * factorial(m) for j, m in mult.items())
            rows.append((mu, factorial(n) // z))
        return ClassTable("A", n, tuple(rows))
    check_n(n, 6, "class_table(B)")
    counts = Counter(signed_cycle_type(g) for g in enumerate_group("B", n)) if n else Counter({((), ()): 1})
    return ClassTable("B", n, tuple((label, counts[label]) for label in bipartitions_of(n)))


def class_representative(kind: str, label: Label) -> Union[Permutation, SignedPermutation]:
    """An element with the given cycle type; negative cycles carry one minus sign."""
    _check_kind(kind)
    if kind == "A":
        pos, neg = tuple(label), ()
    else:
        pos, neg = label
    n = sum(pos) + sum(neg)
    window = [0] * n
    start = 1
    for length, sign in [(p, 1) for p in pos] + [(q, -1) for q in neg]:
        cyc = list(range(start, start + length))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            window[a - 1] = b
        window[cyc[-1] - 1] *= sign
        start += length
    if kind == "A":
        return Permutation(tuple(window))
    return SignedPermutation(tuple(window))


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Murnaghan–Nakayama on beta-sets: remove a rim hook of length mu[0]."""
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    occupied = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        if b - r < 0 or (b - r) in occupied:
            continue
        height = sum(1 for c in beta if b - r < c < b)
        new_beta = sorted(beta[:idx] + [b - r] + beta[idx + 1:], reverse=True)
        new_lam = tuple(new_beta[i] - (length - 1 - i) for i in range(length))
        total += (-1) ** height * _mn(partition(new_lam), rest)
    return total


def sn_character(lam) -> ClassFunction:
    lam = partition(lam)
    n = sum(lam)
    check_n(n, 8, "sn_character")
    return ClassFunction("A", n, {mu: Fraction(_mn(lam, mu)) for mu in partitions_of(n)})


def _sn_value(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    return _mn(lam, tuple(sorted(mu, reverse=True)))


def bn_character(lam1, lam2) -> ClassFunction:
    """Read off the coefficient of s_lam1(x) s_lam2(y) in the two-alphabet power sum."""
    lam1, lam2 = partition(lam1), partition(lam2)
    k1, k2 = sum(lam1), sum(lam2)
    n = k1 + k2
    check_n(n, 5, "bn_character")
    values = {}
    for mu1, mu2 in bipartitions_of(n):
        parts = [(p, 1) for p in mu1] + [(p, -1) for p in mu2]
        total = 0
        # send each cycle to the x- or y-alphabet; y-copies of negative cycles flip sign
        for choice in product((0, 1), repeat=len(parts)):
            alpha = [p for (p, _), c in zip(parts, choice) if c == 0]
            beta = [p for (p, _), c in zip(parts, choice) if c == 1]
            if sum(alpha) != k1:
                continue
            sign = prod(s for (_, s), c in zip(parts, choice) if c == 1)
            total += sign * _sn_value(lam1, tuple(alpha)) * _sn_value(lam2, tuple(beta))
        values[(mu1, mu2)] = Fraction(total)
    return ClassFunction("B", n, values)


def irreducible_labels(kind: str, n: int) -> list[Label]:
    _check_kind(kind)
    return partitions_of(n) if kind == "A" else bipartitions_of(n)


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """``(1/|G|) sum_classes size * f * g`` (characters here are real-valued)."""
    if (f.kind, f.n) != (g.kind, g.n):
        raise ValueError("class functions live on different groups")
    table = class_table(f.kind, f.n)
    return sum((size * f[label] * g[label] for label, size in table.classes), Fraction(0)) / table.order


def descent_rep_character(kind: str, n: int, S: Iterable[int], S2: Optional[Iterable[int]] = None) -> ClassFunction:
    """Character of R_S (type A) or R^B_{S, S2} (type B).

    For each class representative tau the value is the sum of diagonal
    coefficients of tau acting on the basis elements with descent data S
    (and negative set S2); coordinates of strictly dominated exponent
    partitions are dropped by the quotient and never reach the diagonal.
    """
    _check_kind(kind)
    S = tuple(sorted(set(S)))
    if kind == "A":
        check_n(n, 5, "descent_rep_character(A)")
        if any(not 1 <= i <= n - 1 for i in S):
            raise ValueError(f"descent set {S} not inside [1, {n - 1}]")
        members = [g for g in enumerate_group("A", n) if perm_stats(g.window).des_set == S]
    else:
        check_n(n, 3, "descent_rep_character(B)")
        S2 = tuple(sorted(set(S2 or ())))
        _, ok = lambda_S1S2(S, S2, n)
        if not ok:
            raise ValueError(f"lambda_(S1,S2) for S1={S}, S2={S2} is not a partition; R^B vanishes")
        members = []
        for g in enumerate_group("B", n):
            st = signed_stats(g)
            if st.des_set == S and st.neg_set == S2:
                members.append(g)
    table = class_table(kind, n)
    values = {}
    for label, _ in table.classes:
        tau = class_representative(kind, label)
        values[label] = Fraction(sum(normal_form(act(tau, basis_monomial(g)), kind)[g] for g in members))
    return ClassFunction(kind, n, values)


@dataclass(frozen=True)
class Multiplicity:
    tableaux: int
    inner_product: Fraction

    @property
    def agree(self) -> bool:
        return self.inner_product == self.tableaux


def multiplicity(kind: str, n: int, S: Iterable[int], mu, S2: Optional[Iterable[int]] = None,
                 character: Optional[ClassFunction] = None) -> Multiplicity:
    """Tableau count and character inner product for one irreducible in R_S (or R^B_{S,S2}).

    ``mu`` is a partition (type A) or a pair of partitions (type B).  A
    precomputed ``character`` of the descent representation may be passed in.
    """
    S = tuple(sorted(set(S)))
    if character is None:
        character = descent_rep_character(kind, n, S, S2)
    if kind == "A":
        mu = partition(mu)
        count = sum(1 for T in enumerate_SYT(mu) if T.des_set == S)
        irr = sn_character(mu)
    else:
        S2 = tuple(sorted(set(S2 or ())))
        mu1, mu2 = partition(mu[0]), partition(mu[1])
        count = sum(1 for T in enumerate_SYT_bi(mu1, mu2) if T.des_set == S and T.neg_set == S2)
        irr = bn_character(mu1, mu2)
    return Multiplicity(count, inner_product(character, irr))


def character_table(kind: str, n: int) -> tuple[list[Label], list[Label], list[list[Fraction]]]:
    """(irreducible labels, class labels, values) with rows indexed by irreducibles."""
    irreps = irreducible_labels(kind, n)
    classes = class_table(kind, n).labels()
    chars = [sn_character(lam) if kind == "A" else bn_character(*lam) for lam in irreps]
    return irreps, classes, [[chi[c] for c in classes] for chi in chars]


def format_label(label: Label) -> str:
    if label and isinstance(label[0], tuple):
        return "(" + format_partition(label[0]) + "|" + format_partition(label[1]) + ")"
    return "(" + format_partition(label) + ")"


def character_table_csv(kind: str, n: int) -> str:
    irreps, classes, rows = character_table(kind, n)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["irreducible"] + [format_label(c) for c in classes])
    for lam, row in zip(irreps, rows):
        writer.writerow([format_label(lam)] + [f"{v.numerator}/{v.denominator}" for v in row])
    return buf.getvalue()
