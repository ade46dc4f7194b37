import csv
import io
from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

import pytest

from coinv._limits import CapacityError
from coinv.groups import cycle_type, enumerate_group, perm_stats, signed_cycle_type, signed_stats
from coinv.reptheory import (
    bn_character, character_table, character_table_csv, class_representative, class_table,
    descent_rep_character, inner_product, irreducible_labels, multiplicity, sn_character,
)
from coinv.shapes import bipartitions_of, enumerate_SYT, enumerate_SYT_bi, lambda_S1S2, partitions_of


def subsets(items):
    items = list(items)
    return [c for k in range(len(items) + 1) for c in combinations(items, k)]


def test_class_table_examples():
    assert dict(class_table("A", 3).classes) == {(1, 1, 1): 1, (2, 1): 3, (3,): 2}
    assert dict(class_table("B", 1).classes) == {((1,), ()): 1, ((), (1,)): 1}
    assert dict(class_table("A", 1).classes) == {(1,): 1}


@pytest.mark.parametrize("n", range(1, 6))
def test_type_A_class_sizes_match_grouping(n):
    counts = Counter(cycle_type(g) for g in enumerate_group("A", n))
    assert dict(class_table("A", n).classes) == dict(counts)
    assert class_table("A", n).order == factorial(n)


@pytest.mark.parametrize("kind,n", [("A", 4), ("B", 3)])
def test_class_representatives_have_their_label(kind, n):
    for label in class_table(kind, n).labels():
        g = class_representative(kind, label)
        assert (cycle_type(g) if kind == "A" else signed_cycle_type(g)) == label


def test_sn_character_examples():
    for n in range(1, 6):
        triv = sn_character((n,))
        assert all(v == 1 for v in triv.values.values())
        sign = sn_character((1,) * n)
        assert all(sign[mu] == (-1) ** (n - len(mu)) for mu in partitions_of(n))
    assert sn_character((2, 1))[(1, 1, 1)] == 2


def test_bn_character_examples():
    for n in range(1, 5):
        assert all(v == 1 for v in bn_character((n,), ()).values.values())
    chi = bn_character((), (1,))
    assert chi[((1,), ())] == 1 and chi[((), (1,))] == -1
    for n in range(1, 5):
        for lam1, lam2 in bipartitions_of(n):
            dim = sum(1 for _ in enumerate_SYT_bi(lam1, lam2))
            assert bn_character(lam1, lam2)[((1,) * n, ())] == dim
            a = sum(1 for _ in enumerate_SYT(lam1)) if lam1 else 1
            b = sum(1 for _ in enumerate_SYT(lam2)) if lam2 else 1
            assert dim == comb(n, sum(lam1)) * a * b


@pytest.mark.parametrize("kind,n", [("A", n) for n in range(1, 7)] + [("B", n) for n in range(1, 5)])
def test_orthogonality(kind, n):
    labels = irreducible_labels(kind, n)
    chars = [sn_character(l) if kind == "A" else bn_character(*l) for l in labels]
    for i, f in enumerate(chars):
        for j, g in enumerate(chars):
            assert inner_product(f, g) == (1 if i == j else 0)
    # the squared dimensions add up to the group order
    identity = (1,) * n if kind == "A" else ((1,) * n, ())
    assert sum(chi[identity] ** 2 for chi in chars) == class_table(kind, n).order


def test_column_orthogonality_type_B():
    n = 3
    _, classes, rows = character_table("B", n)
    table = class_table("B", n)
    for j, c in enumerate(classes):
        assert sum(row[j] ** 2 for row in rows) * table.size(c) == table.order


def test_descent_rep_trivial_and_sign():
    for n in range(1, 5):
        chi = descent_rep_character("A", n, ())
        assert all(v == 1 for v in chi.values.values())
    chi = descent_rep_character("A", 3, (1, 2))
    assert chi.values == sn_character((1, 1, 1)).values


@pytest.mark.parametrize("n", range(1, 5))
def test_descent_rep_dimension_counts_permutations(n):
    for S in subsets(range(1, n)):
        want = sum(1 for g in enumerate_group("A", n) if perm_stats(g.window).des_set == S)
        assert descent_rep_character("A", n, S)[(1,) * n] == want


def test_descent_rep_type_B_dimension():
    n = 2
    for S1 in subsets(range(1, n)):
        for S2 in subsets(range(1, n + 1)):
            if not lambda_S1S2(S1, S2, n)[1]:
                continue
            want = sum(1 for g in enumerate_group("B", n)
                       if signed_stats(g).des_set == S1 and signed_stats(g).neg_set == S2)
            assert descent_rep_character("B", n, S1, S2)[((1,) * n, ())] == want


def test_descent_rep_errors():
    with pytest.raises(ValueError):
        descent_rep_character("A", 3, (3,))
    with pytest.raises(ValueError):
        # lambda_(S1,S2) = (2,3,0) is not a partition
        descent_rep_character("B", 3, (2,), (2,))
    with pytest.raises(ValueError):
        descent_rep_character("C", 2, ())
    with pytest.raises(CapacityError):
        descent_rep_character("A", 6, ())


def test_unrealised_partition_gives_zero_character():
    # lambda = (3,0,0) is a partition, yet no signed permutation has Des={1}, Neg={1}
    assert lambda_S1S2((1,), (1,), 3) == ((3, 0, 0), True)
    chi = descent_rep_character("B", 3, (1,), (1,))
    assert all(v == 0 for v in chi.values.values())
    for mu in bipartitions_of(3):
        m = multiplicity("B", 3, (1,), mu, S2=(1,), character=chi)
        assert m.tableaux == 0 and m.agree


def test_multiplicity_examples():
    m = multiplicity("A", 3, (1,), (2, 1))
    assert m.tableaux == 1 and m.inner_product == 1 and m.agree
    for n in range(1, 5):
        for mu in partitions_of(n):
            m = multiplicity("A", n, (), mu)
            assert m.agree and m.tableaux == (1 if mu == (n,) else 0)
    m = multiplicity("B", 1, (), ((), (1,)), S2=(1,))
    assert m.tableaux == 1 and m.inner_product == 1


def test_regular_representation():
    for n in range(1, 5):
        total = None
        for S in subsets(range(1, n)):
            chi = descent_rep_character("A", n, S)
            total = chi if total is None else total + chi
        for mu, v in total.values.items():
            assert v == (factorial(n) if mu == (1,) * n else 0)


def test_regular_representation_type_B():
    n = 2
    total = None
    for S1 in subsets(range(1, n)):
        for S2 in subsets(range(1, n + 1)):
            if lambda_S1S2(S1, S2, n)[1]:
                chi = descent_rep_character("B", n, S1, S2)
                total = chi if total is None else total + chi
    for label, v in total.values.items():
        assert v == (8 if label == ((1, 1), ()) else 0)


def test_graded_dimensions():
    # degree of R_S is the sum of S; the graded dimensions are the maj distribution
    for n in range(1, 5):
        by_degree = Counter()
        for S in subsets(range(1, n)):
            by_degree[sum(S)] += descent_rep_character("A", n, S)[(1,) * n]
        maj = Counter(perm_stats(g.window).maj for g in enumerate_group("A", n))
        assert by_degree == maj
        assert sum(by_degree.values()) == factorial(n)


def test_character_table_csv():
    rows = list(csv.reader(io.StringIO(character_table_csv("A", 3))))
    assert rows[0] == ["irreducible", "(3)", "(2,1)", "(1,1,1)"]
    assert len(rows) == 4
    assert ["(2,1)", "-1/1", "0/1", "2/1"] in rows
    rows_b = list(csv.reader(io.StringIO(character_table_csv("B", 1))))
    assert rows_b[0][0] == "irreducible" and len(rows_b) == 3
    assert sorted(rows_b[0][1:]) == ["(1|)", "(|1)"]
    assert all(isinstance(v, Fraction) for row in character_table("B", 2)[2] for v in row)
