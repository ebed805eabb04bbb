import itertools
import math

import pytest
from hypothesis import given, strategies as st

from secantplanes import combinatorics as comb
from secantplanes.combinatorics import IndegreeTuple, Partition


def test_catalan():
    assert [comb.catalan(n) for n in (0, 3, 5)] == [1, 5, 42]


def test_prufer_decode():
    assert comb.prufer_decode((), 2) == [(1, 2)]
    assert comb.prufer_decode((4, 4, 4), 5) == [(1, 4), (2, 4), (3, 4), (4, 5)]
    with pytest.raises(ValueError):
        comb.prufer_decode((1,), 2)


def test_tree_weight_sums():
    assert comb.spanning_tree_weight_sum(2) == 1
    assert comb.spanning_tree_weight_sum(3) == 4
    assert comb.spanning_tree_weight_sum(4) == 30
    assert comb.tree_count(4) == 16
    with pytest.raises(ValueError):
        comb.spanning_tree_weight_sum(comb.TREE_CAP + 1)


def test_tree_trees_are_trees():
    for edges in comb.spanning_trees(5):
        assert len(set(edges)) == 4
        seen = {1}
        changed = True
        while changed:
            changed = False
            for a, b in edges:
                if (a in seen) != (b in seen):
                    seen |= {a, b}
                    changed = True
        assert seen == set(range(1, 6))


def test_average_weight():
    for d in range(2, 8):
        assert comb.spanning_tree_weight_sum(d) == comb.catalan(d - 1) * math.factorial(d - 1)


def test_admissible_tuples_are_catalan():
    assert comb.admissible_tuples(4) == sorted(comb.admissible_tuples(4))
    for d in range(1, 9):
        assert len(comb.admissible_tuples(d)) == comb.catalan(d - 1)


def test_indegree_tuples_admissible():
    for d in range(2, 7):
        assert all(comb.admissible(t) for t in comb.indegree_distribution(d))


def test_phi_examples():
    assert comb.phi_count((2, 1, 0)) == 3
    assert comb.phi_formula(Partition((2, 1)), 4) == 3
    for d in range(2, 8):
        ones = (1,) * (d - 1)
        assert comb.phi_count(ones) == 1 == comb.phi_formula(Partition(ones), d)
        last = (0,) * (d - 2) + (d - 1,)
        assert comb.phi_count(last) == 1 == comb.phi_formula(Partition(last), d)


def test_a_lambda_examples():
    assert comb.a_lambda_formula(Partition((1, 1, 1)), 4) == 6
    assert comb.a_lambda_count(Partition((1, 1, 1)), 4) == 6
    for d in range(2, 7):
        assert comb.a_lambda_count(Partition((d - 1,)), d) == 1


def test_phi_all_tuples():
    for d in range(2, 7):
        for t in itertools.product(range(d), repeat=d - 1):
            if sum(t) == d - 1:
                assert comb.phi_count(IndegreeTuple(t)) == comb.phi_formula(IndegreeTuple(t).content(), d)


def test_partitions():
    assert [p.parts for p in comb.partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert Partition((0, 1, 2, 0, 2)).parts == (2, 2, 1)
    assert Partition((2, 2, 1)).multiplicities == {2: 2, 1: 1}
    assert Partition((2, 2, 1)).k == 3


def test_wz():
    assert comb.wz_term(2, 0) == 1
    assert comb.wz_identity_check(2) and comb.wz_identity_check(3)
    assert all(comb.wz_identity_check(n) for n in range(2, 51))


@given(st.lists(st.integers(min_value=0, max_value=4), min_size=1, max_size=7))
def test_admissible_matches_dyck(entries):
    # admissible iff the lattice path with up-steps per slot stays weakly below the diagonal
    ok = all(sum(entries[:j]) <= j for j in range(1, len(entries) + 1))
    assert comb.admissible(entries) == ok
