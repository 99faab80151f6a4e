"""Unit tests for permutations, partitions, the set-partition lattice and
classification labels."""

import random

import pytest

from braidties.combinatorics import (
    Permutation,
    SetPartition,
    all_permutations,
    bell_number,
    check_label,
    conjugate_partition,
    dominance_leq,
    enumerate_labels,
    partitions_of,
    sp_apply,
    sp_closure,
    sp_enumerate,
    sp_join,
    sp_leq,
    sp_moebius,
    tableau_data,
    total_lt,
)


def test_permutation_compose_convention():
    v = Permutation((2, 3, 1))
    w = Permutation((2, 1, 3))
    assert (v * w).images == tuple(v(w(i)) for i in (1, 2, 3))
    assert (v * v.inverse()).images == (1, 2, 3)


def test_length_and_reduced_word():
    rng = random.Random(2)
    perms = all_permutations(4)
    for w in perms:
        word = w.reduced_word()
        assert len(word) == w.length()
        # the word multiplies back to w (s_i as adjacent transpositions)
        cur = Permutation(tuple(range(1, 5)))
        for i in word:
            im = list(range(1, 5))
            im[i - 1], im[i] = im[i], im[i - 1]
            cur = cur * Permutation(tuple(im))
        assert cur == w
    assert len(perms) == 24


def test_partitions():
    assert len(partitions_of(4)) == 5
    for lam in partitions_of(5):
        assert conjugate_partition(conjugate_partition(lam)) == lam
    assert dominance_leq((1, 1, 1), (3,))
    assert not dominance_leq((3,), (2, 1))
    # the total order refines dominance and compares sizes first
    assert total_lt((3,), (1, 1, 1, 1))
    assert total_lt((1, 1, 1), (2, 1))


def test_set_partition_lattice():
    for n, b in ((1, 1), (2, 2), (3, 5), (4, 15), (5, 52)):
        assert len(sp_enumerate(n)) == b
        assert bell_number(n) == b
    a = sp_closure([(1, 2)], 4)
    b = sp_closure([(2, 3)], 4)
    j = sp_join(a, b)
    assert j == sp_closure([(1, 2), (2, 3)], 4)
    assert sp_leq(a, j) and sp_leq(b, j)
    assert not sp_leq(j, a)
    assert sp_join(a, a) == a
    assert sp_join(a, SetPartition.bottom(4)) == a
    assert sp_join(a, SetPartition.top(4)) == SetPartition.top(4)


def test_sp_apply_is_action():
    rng = random.Random(3)
    perms = all_permutations(4)
    sps = sp_enumerate(4)
    for _ in range(30):
        v = perms[rng.randrange(24)]
        w = perms[rng.randrange(24)]
        a = sps[rng.randrange(15)]
        assert sp_apply(v, sp_apply(w, a)) == sp_apply(v * w, a)
        assert sp_join(sp_apply(v, a), sp_apply(v, a)) == sp_apply(v, a)


def test_sp_moebius():
    # partition lattice: mu(bottom, top) = (-1)^(n-1) (n-1)!
    for n, val in ((2, -1), (3, 2), (4, -6)):
        assert sp_moebius(SetPartition.bottom(n), SetPartition.top(n)) == val
    # defining property: the interval sum vanishes
    bot = SetPartition.bottom(3)
    top = SetPartition.top(3)
    total = sum(
        sp_moebius(a, top) for a in sp_enumerate(3) if sp_leq(bot, a)
    )
    assert total == 0
    assert sp_moebius(top, top) == 1


def test_tableau_data():
    td = tableau_data((2, 1))
    assert len(td.row_stabilizer) == 2
    assert len(td.col_stabilizer) == 2
    td3 = tableau_data((3,))
    assert len(td3.row_stabilizer) == 6
    assert len(td3.col_stabilizer) == 1
    # w_lambda maps the row filling to the column filling cellwise
    assert tableau_data((2, 1)).w_lambda.images == (1, 3, 2)


def test_labels():
    assert len(enumerate_labels(2)) == 4
    assert len(enumerate_labels(3)) == 8
    assert len(enumerate_labels(4)) == 22
    # weights sum to n and the lambda^s are strictly increasing
    for lab in enumerate_labels(4):
        assert sum(m * sum(lam) for lam, m, _ in lab) == 4
        lams = [lam for lam, _, _ in lab]
        assert all(total_lt(a, b) for a, b in zip(lams, lams[1:]))
        assert check_label(lab, 4) == lab
    with pytest.raises(ValueError):
        check_label((((1,), 1, (1,)),), 2)
