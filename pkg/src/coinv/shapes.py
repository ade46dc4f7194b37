"""Partitions, standard and reverse semistandard (bi)tableaux.

Partitions are plain tuples of positive integers in weakly decreasing order;
``()`` is the empty partition.  Functions that need a fixed length ``n`` take
it explicitly and pad with zeros.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from coinv._limits import check_n

__all__ = [
    "Cmp", "partition", "conjugate", "dominance_cmp", "partitions_of",
    "partitions_in_box", "bipartitions_of", "lambda_S", "lambda_S1S2",
    "is_partition", "StandardTableau", "BiTableau", "ReverseSSYT", "ReverseSSYT_B",
    "enumerate_SYT", "enumerate_SYT_bi", "enumerate_RSSYT", "enumerate_RSSYT_B",
    "phi_A", "phi_A_inverse", "phi_B", "phi_B_inverse",
    "parse_partition", "format_partition", "parse_tableau", "format_tableau",
    "parse_bitableau", "format_bitableau", "MAX_SYT_SIZE", "MAX_BI_SIZE",
]

MAX_SYT_SIZE = 12
MAX_BI_SIZE = 9

Partition = tuple[int, ...]
Rows = tuple[tuple[int, ...], ...]


class Cmp(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def partition(parts: Iterable[int]) -> Partition:
    """Normalize to a tuple without trailing zeros; reject non-partitions."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts) or not is_partition(parts):
        raise ValueError(f"{parts} is not a partition")
    return tuple(p for p in parts if p > 0)


def is_partition(vec: Sequence[int]) -> bool:
    return all(vec[i] >= vec[i + 1] for i in range(len(vec) - 1)) and all(v >= 0 for v in vec)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = [p for p in lam if p > 0]
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def dominance_cmp(lam: Sequence[int], mu: Sequence[int]) -> Cmp:
    """Compare two partitions of the same size in dominance order."""
    if sum(lam) != sum(mu):
        raise ValueError(f"dominance_cmp: sizes differ ({sum(lam)} vs {sum(mu)})")
    length = max(len(lam), len(mu))
    a = list(lam) + [0] * (length - len(lam))
    b = list(mu) + [0] * (length - len(mu))
    below = above = False
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            below = True
        elif sa > sb:
            above = True
    if below and above:
        return Cmp.INCOMPARABLE
    if below:
        return Cmp.LESS
    if above:
        return Cmp.GREATER
    return Cmp.EQUAL


def partitions_of(n: int, max_part: Optional[int] = None, max_len: Optional[int] = None) -> list[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n
    out: list[Partition] = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) == max_len:
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, max_part, [])
    return out


def partitions_in_box(max_len: int, max_size: int) -> list[Partition]:
    """All partitions with at most ``max_len`` parts and size at most ``max_size``."""
    return [lam for k in range(max_size + 1) for lam in partitions_of(k, max_len=max_len)]


def bipartitions_of(n: int) -> list[tuple[Partition, Partition]]:
    return [(a, b) for k in range(n, -1, -1) for a in partitions_of(k) for b in partitions_of(n - k)]


def lambda_S(S: Iterable[int], n: int) -> tuple[int, ...]:
    """``lambda_i = |S ∩ {i..n}|`` as a length-n vector."""
    S = set(S)
    if any(not 1 <= i <= n for i in S):
        raise ValueError(f"lambda_S: {sorted(S)} not inside [1, {n}]")
    return tuple(sum(1 for j in S if j >= i) for i in range(1, n + 1))


def lambda_S1S2(S1: Iterable[int], S2: Iterable[int], n: int) -> tuple[tuple[int, ...], bool]:
    """The vector ``2 lambda_S1 + 1_S2`` and whether it is weakly decreasing."""
    S1 = set(S1)
    S2 = set(S2)
    if any(not 1 <= i <= n - 1 for i in S1) or any(not 1 <= i <= n for i in S2):
        raise ValueError(f"lambda_S1S2: sets {sorted(S1)}, {sorted(S2)} out of range for n={n}")
    base = lambda_S(S1, n)
    vec = tuple(2 * b + (1 if i in S2 else 0) for i, b in enumerate(base, start=1))
    return vec, is_partition(vec)


def _shape_of(rows: Rows) -> Partition:
    return tuple(len(r) for r in rows)


def _check_standard(rows: Rows, what: str) -> None:
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            if c > 0 and row[c - 1] >= v:
                raise ValueError(f"{what}: row {r + 1} not increasing")
            if r > 0 and (c >= len(rows[r - 1]) or rows[r - 1][c] >= v):
                raise ValueError(f"{what}: column {c + 1} not increasing")
    if not is_partition(_shape_of(rows)):
        raise ValueError(f"{what}: row lengths are not a partition")


@dataclass(frozen=True)
class StandardTableau:
    rows: Rows

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows if len(row) > 0)
        object.__setattr__(self, "rows", rows)
        _check_standard(rows, "StandardTableau")
        entries = sorted(v for row in rows for v in row)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("StandardTableau: entries must be exactly 1..n")

    @property
    def shape(self) -> Partition:
        return _shape_of(self.rows)

    @property
    def n(self) -> int:
        return sum(self.shape)

    @cached_property
    def _row_of(self) -> dict[int, int]:
        return {v: r for r, row in enumerate(self.rows) for v in row}

    @cached_property
    def des_set(self) -> tuple[int, ...]:
        row_of = self._row_of
        return tuple(i for i in range(1, self.n) if row_of[i + 1] > row_of[i])

    @property
    def des(self) -> int:
        return len(self.des_set)

    @property
    def maj(self) -> int:
        return sum(self.des_set)

    @property
    def d_vector(self) -> tuple[int, ...]:
        return lambda_S(self.des_set, self.n)

    def __str__(self) -> str:
        return format_tableau(self.rows)


@dataclass(frozen=True)
class BiTableau:
    """A standard tableau on the disjoint union of two diagrams.

    The second diagram sits southwest of the first, so every row of
    ``second`` counts as lower than every row of ``first``.
    """

    first: Rows
    second: Rows

    def __post_init__(self):
        first = tuple(tuple(int(v) for v in row) for row in self.first if len(row) > 0)
        second = tuple(tuple(int(v) for v in row) for row in self.second if len(row) > 0)
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)
        _check_standard(first, "BiTableau (first)")
        _check_standard(second, "BiTableau (second)")
        entries = sorted(v for rows in (first, second) for row in rows for v in row)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("BiTableau: entries must be exactly 1..n")

    @property
    def shape(self) -> tuple[Partition, Partition]:
        return _shape_of(self.first), _shape_of(self.second)

    @property
    def n(self) -> int:
        return sum(map(sum, self.shape))

    @cached_property
    def _row_of(self) -> dict[int, int]:
        offset = len(self.first)
        pos = {v: r for r, row in enumerate(self.first) for v in row}
        pos.update({v: offset + r for r, row in enumerate(self.second) for v in row})
        return pos

    @cached_property
    def des_set(self) -> tuple[int, ...]:
        row_of = self._row_of
        return tuple(i for i in range(1, self.n) if row_of[i + 1] > row_of[i])

    @cached_property
    def neg_set(self) -> tuple[int, ...]:
        return tuple(sorted(v for row in self.second for v in row))

    @property
    def maj(self) -> int:
        return sum(self.des_set)

    @property
    def fmaj(self) -> int:
        return 2 * self.maj + len(self.neg_set)

    @property
    def d_vector(self) -> tuple[int, ...]:
        return lambda_S(self.des_set, self.n)

    @property
    def f_vector(self) -> tuple[int, ...]:
        return lambda_S1S2(self.des_set, self.neg_set, self.n)[0]

    def __str__(self) -> str:
        return format_bitableau(self)


def _check_reverse(rows: Rows, what: str) -> None:
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            if v < 1:
                raise ValueError(f"{what}: entries must be positive")
            if c > 0 and row[c - 1] < v:
                raise ValueError(f"{what}: row {r + 1} not weakly decreasing")
            if r > 0 and (c >= len(rows[r - 1]) or rows[r - 1][c] <= v):
                raise ValueError(f"{what}: column {c + 1} not strictly decreasing")
    if not is_partition(_shape_of(rows)):
        raise ValueError(f"{what}: row lengths are not a partition")


@dataclass(frozen=True)
class ReverseSSYT:
    rows: Rows

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows if len(row) > 0)
        object.__setattr__(self, "rows", rows)
        _check_reverse(rows, "ReverseSSYT")

    @property
    def shape(self) -> Partition:
        return _shape_of(self.rows)

    def content(self) -> tuple[int, ...]:
        """``(m_1, m_2, ...)`` up to the largest entry."""
        entries = [v for row in self.rows for v in row]
        top = max(entries, default=0)
        return tuple(entries.count(i) for i in range(1, top + 1))

    def sorted_entries(self) -> tuple[int, ...]:
        return tuple(sorted((v for row in self.rows for v in row), reverse=True))


@dataclass(frozen=True)
class ReverseSSYT_B:
    """Pair of reverse semistandard tableaux; first has odd entries, second even."""

    first: Rows
    second: Rows

    def __post_init__(self):
        first = tuple(tuple(int(v) for v in row) for row in self.first if len(row) > 0)
        second = tuple(tuple(int(v) for v in row) for row in self.second if len(row) > 0)
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)
        _check_reverse(first, "ReverseSSYT_B (first)")
        _check_reverse(second, "ReverseSSYT_B (second)")
        if any(v % 2 != 1 for row in first for v in row):
            raise ValueError("ReverseSSYT_B: entries of the first tableau must be odd")
        if any(v % 2 != 0 for row in second for v in row):
            raise ValueError("ReverseSSYT_B: entries of the second tableau must be even")

    @property
    def shape(self) -> tuple[Partition, Partition]:
        return _shape_of(self.first), _shape_of(self.second)

    def sorted_entries(self) -> tuple[int, ...]:
        return tuple(sorted((v for rows in (self.first, self.second) for row in rows for v in row), reverse=True))


def _cells(shape: Sequence[int]) -> list[tuple[int, int]]:
    return [(r, c) for r, length in enumerate(shape) for c in range(length)]


def _standard_fillings(shape: Partition) -> Iterator[list[list[int]]]:
    """Backtrack over placements of 1..n, smallest addable cell (row-major) first."""
    n = sum(shape)
    filled = [0] * len(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def rec(v):
        if v > n:
            yield rows
            return
        for r, length in enumerate(shape):
            if filled[r] < length and (r == 0 or filled[r - 1] > filled[r]):
                filled[r] += 1
                rows[r].append(v)
                yield from rec(v + 1)
                rows[r].pop()
                filled[r] -= 1

    yield from rec(1)


def enumerate_SYT(lam: Sequence[int]) -> Iterator[StandardTableau]:
    lam = partition(lam)
    check_n(sum(lam), MAX_SYT_SIZE, "enumerate_SYT")
    for rows in _standard_fillings(lam):
        yield StandardTableau(tuple(tuple(r) for r in rows))


def enumerate_SYT_bi(lam1: Sequence[int], lam2: Sequence[int]) -> Iterator[BiTableau]:
    lam1 = partition(lam1)
    lam2 = partition(lam2)
    check_n(sum(lam1) + sum(lam2), MAX_BI_SIZE, "enumerate_SYT_bi")
    # one backtracking pass over the disjoint union; rows of lam2 follow those of lam1
    k = len(lam1)
    for rows in _disjoint_fillings(lam1, lam2):
        yield BiTableau(tuple(tuple(r) for r in rows[:k]), tuple(tuple(r) for r in rows[k:]))


def _disjoint_fillings(lam1: Partition, lam2: Partition) -> Iterator[list[list[int]]]:
    shape = list(lam1) + list(lam2)
    k = len(lam1)
    n = sum(shape)
    filled = [0] * len(shape)
    rows: list[list[int]] = [[] for _ in shape]

    def rec(v):
        if v > n:
            yield rows
            return
        for r, length in enumerate(shape):
            top_of_block = r == 0 or r == k
            if filled[r] < length and (top_of_block or filled[r - 1] > filled[r]):
                filled[r] += 1
                rows[r].append(v)
                yield from rec(v + 1)
                rows[r].pop()
                filled[r] -= 1

    yield from rec(1)


def _reverse_fillings(shape: Partition, values: Sequence[int], budget: Optional[int]) -> Iterator[Rows]:
    """Reverse semistandard fillings using ``values``; cost of entry t is t - 1."""
    values = sorted(set(values), reverse=True)
    cells = _cells(shape)
    grid = [[0] * length for length in shape]

    def rec(idx, spent):
        if idx == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[idx]
        for v in values:
            if c > 0 and v > grid[r][c - 1]:
                continue
            if r > 0 and v >= grid[r - 1][c]:
                continue
            if budget is not None and spent + v - 1 > budget:
                continue
            grid[r][c] = v
            yield from rec(idx + 1, spent + v - 1)
        grid[r][c] = 0

    yield from rec(0, 0)


def enumerate_RSSYT(lam: Sequence[int], max_entry: int, max_degree: Optional[int] = None) -> Iterator[ReverseSSYT]:
    """Reverse SSYT of shape ``lam`` with entries <= max_entry.

    ``max_degree`` (optional) bounds ``sum(entry - 1)`` over the cells.
    """
    lam = partition(lam)
    for rows in _reverse_fillings(lam, range(1, max_entry + 1), max_degree):
        yield ReverseSSYT(rows)


def enumerate_RSSYT_B(lam1: Sequence[int], lam2: Sequence[int], max_entry: int,
                      max_degree: Optional[int] = None) -> Iterator[ReverseSSYT_B]:
    lam1 = partition(lam1)
    lam2 = partition(lam2)
    odd = range(1, max_entry + 1, 2)
    even = range(2, max_entry + 1, 2)
    for first in _reverse_fillings(lam1, odd, max_degree):
        spent = sum(v - 1 for row in first for v in row)
        rest = None if max_degree is None else max_degree - spent
        for second in _reverse_fillings(lam2, even, rest):
            yield ReverseSSYT_B(first, second)


def _label_cells(keyed_cells: list[tuple[int, tuple]]) -> dict[tuple, int]:
    """Label cells 1..n by decreasing entry, ties by increasing column."""
    order = sorted(keyed_cells, key=lambda item: (-item[0], item[1][-1]))
    return {cell: i for i, (_, cell) in enumerate(order, start=1)}


def phi_A(That: ReverseSSYT) -> tuple[StandardTableau, tuple[int, ...]]:
    """Split a reverse SSYT into a standard tableau and a gap vector Delta."""
    keyed = [(v, (r, c)) for r, row in enumerate(That.rows) for c, v in enumerate(row)]
    labels = _label_cells(keyed)
    T = StandardTableau(tuple(tuple(labels[(r, c)] for c in range(len(row))) for r, row in enumerate(That.rows)))
    n = T.n
    entries = list(That.sorted_entries()) + [1]
    d = list(T.d_vector) + [0]
    delta = tuple(entries[i] - d[i] - entries[i + 1] + d[i + 1] for i in range(n))
    return T, delta


def phi_A_inverse(T: StandardTableau, delta: Sequence[int]) -> ReverseSSYT:
    n = T.n
    if len(delta) != n or any(x < 0 for x in delta):
        raise ValueError("phi_A_inverse: Delta must be n nonnegative integers")
    d = T.d_vector
    entry = [1 + d[i] + sum(delta[i:]) for i in range(n)]
    return ReverseSSYT(tuple(tuple(entry[v - 1] for v in row) for row in T.rows))


def phi_B(That: ReverseSSYT_B) -> tuple[BiTableau, tuple[int, ...]]:
    keyed = [(v, (0, r, c)) for r, row in enumerate(That.first) for c, v in enumerate(row)]
    keyed += [(v, (1, r, c)) for r, row in enumerate(That.second) for c, v in enumerate(row)]
    labels = _label_cells(keyed)
    T = BiTableau(
        tuple(tuple(labels[(0, r, c)] for c in range(len(row))) for r, row in enumerate(That.first)),
        tuple(tuple(labels[(1, r, c)] for c in range(len(row))) for r, row in enumerate(That.second)),
    )
    n = T.n
    entries = list(That.sorted_entries()) + [1]
    f = list(T.f_vector) + [0]
    twice = [entries[i] - f[i] - entries[i + 1] + f[i + 1] for i in range(n)]
    if any(x % 2 for x in twice):
        raise ValueError("phi_B: parity violation")
    return T, tuple(x // 2 for x in twice)


def phi_B_inverse(T: BiTableau, delta: Sequence[int]) -> ReverseSSYT_B:
    n = T.n
    if len(delta) != n or any(x < 0 for x in delta):
        raise ValueError("phi_B_inverse: Delta must be n nonnegative integers")
    f = T.f_vector
    entry = [1 + f[i] + 2 * sum(delta[i:]) for i in range(n)]
    return ReverseSSYT_B(
        tuple(tuple(entry[v - 1] for v in row) for row in T.first),
        tuple(tuple(entry[v - 1] for v in row) for row in T.second),
    )


def _decimal(tok: str) -> int:
    tok = tok.strip()
    if not (tok.isascii() and tok.isdecimal()):
        raise ValueError(f"not a nonnegative decimal integer: {tok!r}")
    return int(tok)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "∅", "-"):
        return ()
    return partition(_decimal(t) for t in text.split(","))


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam if p > 0)


def parse_tableau(text: str) -> Rows:
    text = text.strip()
    if text in ("", "∅", "-"):
        return ()
    return tuple(tuple(_decimal(t) for t in row.split(",")) for row in text.split(";"))


def format_tableau(rows: Rows) -> str:
    return ";".join(",".join(str(v) for v in row) for row in rows)


def parse_bitableau(text: str) -> BiTableau:
    if text.count("|") != 1:
        raise ValueError("bitableau text must contain exactly one '|'")
    left, right = text.split("|")
    return BiTableau(parse_tableau(left), parse_tableau(right))


def format_bitableau(T: BiTableau) -> str:
    return format_tableau(T.first) + "|" + format_tableau(T.second)
