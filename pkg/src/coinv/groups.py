"""Symmetric and hyperoctahedral groups in window (one-line) notation.

A permutation ``pi`` of ``[n]`` is stored as the tuple ``(pi(1), ..., pi(n))``.
A signed permutation ``sigma`` of ``[-n, n] \\ {0}`` is stored the same way,
with the rule ``sigma(-a) = -sigma(a)`` left implicit.

>>> perm_stats((2, 6, 1, 3, 5, 4, 7)).d_vector
(2, 2, 1, 1, 1, 0, 0)
>>> compose(Permutation((2, 1, 3)), Permutation((1, 3, 2))).window
(2, 3, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence, Union

from coinv._limits import check_n

__all__ = [
    "Permutation", "SignedPermutation", "DescentStats", "SignedStats",
    "perm_stats", "signed_stats", "invert", "compose", "enumerate_group",
    "cycles", "cycle_type", "signed_cycle_type", "identity",
    "parse_permutation", "parse_signed_permutation", "format_window",
    "MAX_N_A", "MAX_N_B",
]

MAX_N_A = 8
MAX_N_B = 6

_MINUS_SIGNS = ("−", "–")


@dataclass(frozen=True, order=True)
class Permutation:
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(a) for a in self.window)
        object.__setattr__(self, "window", window)
        if sorted(window) != list(range(1, len(window) + 1)):
            raise ValueError(f"{window} is not a permutation of 1..{len(window)}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def __len__(self) -> int:
        return len(self.window)

    def __iter__(self):
        return iter(self.window)

    def __str__(self) -> str:
        if self.n < 10:
            return "".join(str(a) for a in self.window)
        return format_window(self.window)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cyc: Sequence[Sequence[int]]) -> "Permutation":
        """Build from disjoint cycles, e.g. ``from_cycles(3, [(1, 2)])`` is 213."""
        image = list(range(1, n + 1))
        for c in cyc:
            for a, b in zip(c, tuple(c[1:]) + (c[0],)):
                image[a - 1] = b
        return cls(tuple(image))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, a in enumerate(self.window, start=1):
            inv[a - 1] = i
        return Permutation(tuple(inv))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)


@dataclass(frozen=True, order=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(a) for a in self.window)
        object.__setattr__(self, "window", window)
        if 0 in window:
            raise ValueError(f"{window}: 0 is not a valid entry of a signed permutation")
        if sorted(abs(a) for a in window) != list(range(1, len(window) + 1)):
            raise ValueError(f"{window}: absolute values are not a permutation of 1..{len(window)}")

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        a = self.window[abs(i) - 1]
        return a if i > 0 else -a

    def __len__(self) -> int:
        return len(self.window)

    def __iter__(self):
        return iter(self.window)

    def __str__(self) -> str:
        return "[" + format_window(self.window) + "]"

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)))

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.n
        for i, a in enumerate(self.window, start=1):
            inv[abs(a) - 1] = i if a > 0 else -i
        return SignedPermutation(tuple(inv))

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)


GroupElement = Union[Permutation, SignedPermutation]


def identity(kind: str, n: int) -> GroupElement:
    return Permutation.identity(n) if kind == "A" else SignedPermutation.identity(n)


@dataclass(frozen=True)
class DescentStats:
    des_set: tuple[int, ...]
    des: int
    maj: int
    inv: int
    d_vector: tuple[int, ...]


@dataclass(frozen=True)
class SignedStats:
    des_set: tuple[int, ...]
    neg_set: tuple[int, ...]
    d_vector: tuple[int, ...]
    n_vector: tuple[int, ...]
    eps_vector: tuple[int, ...]
    f_vector: tuple[int, ...]
    maj: int
    fmaj: int
    fdes: int
    ndes_multiset: tuple[int, ...]
    ndes: int
    nmaj: int


def _suffix_counts(positions: Sequence[int], n: int) -> tuple[int, ...]:
    """``c_i = #{j in positions : j >= i}`` for i = 1..n."""
    marks = [0] * (n + 2)
    for j in positions:
        marks[j] += 1
    out = [0] * n
    running = 0
    for i in range(n, 0, -1):
        running += marks[i]
        out[i - 1] = running
    return tuple(out)


def perm_stats(w: Sequence[int]) -> DescentStats:
    """Descent statistics of a sequence over any linearly ordered alphabet."""
    w = tuple(w)
    n = len(w)
    if n == 0:
        raise ValueError("perm_stats: empty sequence")
    des_set = tuple(i for i in range(1, n) if w[i - 1] > w[i])
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
    return DescentStats(
        des_set=des_set,
        des=len(des_set),
        maj=sum(des_set),
        inv=inv,
        d_vector=_suffix_counts(des_set, n),
    )


def signed_stats(sigma: SignedPermutation) -> SignedStats:
    n = sigma.n
    base = perm_stats(sigma.window)
    neg_set = tuple(i for i, a in enumerate(sigma.window, start=1) if a < 0)
    eps = tuple(1 if a < 0 else 0 for a in sigma.window)
    f = tuple(2 * d + e for d, e in zip(base.d_vector, eps))
    neg_inv = tuple(i for i, a in enumerate(sigma.inverse().window, start=1) if a < 0)
    ndes_multiset = tuple(sorted(base.des_set + neg_inv))
    return SignedStats(
        des_set=base.des_set,
        neg_set=neg_set,
        d_vector=base.d_vector,
        n_vector=_suffix_counts(neg_set, n),
        eps_vector=eps,
        f_vector=f,
        maj=base.maj,
        fmaj=2 * base.maj + len(neg_set),
        fdes=2 * base.des + eps[0],
        ndes_multiset=ndes_multiset,
        ndes=len(ndes_multiset),
        nmaj=sum(ndes_multiset),
    )


def invert(g: GroupElement) -> GroupElement:
    return g.inverse()


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    """``(g h)(i) = g(h(i))``."""
    if type(g) is not type(h):
        raise TypeError(f"cannot compose {type(g).__name__} with {type(h).__name__}")
    if g.n != h.n:
        raise ValueError(f"size mismatch: {g.n} vs {h.n}")
    return type(g)(tuple(g(a) for a in h.window))


def _signed_windows(n: int) -> Iterator[tuple[int, ...]]:
    values = sorted(list(range(-n, 0)) + list(range(1, n + 1)))
    used = [False] * (n + 1)
    window: list[int] = []

    def rec():
        if len(window) == n:
            yield tuple(window)
            return
        for a in values:
            if not used[abs(a)]:
                used[abs(a)] = True
                window.append(a)
                yield from rec()
                window.pop()
                used[abs(a)] = False

    yield from rec()


def enumerate_group(kind: str, n: int) -> Iterator[GroupElement]:
    """All elements of S_n (``kind="A"``) or B_n (``kind="B"``), windows in lex order."""
    if n < 1:
        raise ValueError(f"enumerate_group: n must be positive, got {n}")
    if kind == "A":
        check_n(n, MAX_N_A, "enumerate_group(A)")
        return (Permutation(w) for w in permutations(range(1, n + 1)))
    if kind == "B":
        check_n(n, MAX_N_B, "enumerate_group(B)")
        return (SignedPermutation(w) for w in _signed_windows(n))
    raise ValueError(f"unknown group type {kind!r}")


def cycles(g: GroupElement) -> list[tuple[tuple[int, ...], int]]:
    """Cycles of ``|g|`` on ``[n]`` paired with the product of their signs."""
    seen = [False] * (g.n + 1)
    out = []
    for start in range(1, g.n + 1):
        if seen[start]:
            continue
        cyc = []
        sign = 1
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            a = g.window[i - 1]
            if a < 0:
                sign = -sign
            i = abs(a)
        out.append((tuple(cyc), sign))
    return out


def cycle_type(g: Permutation) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c, _ in cycles(g)), reverse=True))


def signed_cycle_type(g: SignedPermutation) -> tuple[tuple[int, ...], tuple[int, ...]]:
    pos = sorted((len(c) for c, s in cycles(g) if s > 0), reverse=True)
    neg = sorted((len(c) for c, s in cycles(g) if s < 0), reverse=True)
    return tuple(pos), tuple(neg)


def _parse_ints(text: str) -> tuple[int, ...]:
    for minus in _MINUS_SIGNS:
        text = text.replace(minus, "-")
    text = text.strip().strip("[]")
    if not text:
        raise ValueError("empty window")
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        digits = tok[1:] if tok.startswith("-") else tok
        if not (digits.isascii() and digits.isdecimal()):
            raise ValueError(f"not a decimal integer: {tok!r}")
        out.append(int(tok))
    return tuple(out)


def parse_permutation(text: str) -> Permutation:
    return Permutation(_parse_ints(text))


def parse_signed_permutation(text: str) -> SignedPermutation:
    return SignedPermutation(_parse_ints(text))


def format_window(window: Sequence[int]) -> str:
    return ",".join(str(a) for a in window)
