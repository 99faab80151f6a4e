"""Unit tests for the tensor representation, its faithfulness certificate,
and the quotient submodules."""

import random

import pytest

from braidties.algebra_core import AlgebraElement, basis_keys, gen, mul
from braidties.combinatorics import Permutation, SetPartition, sp_closure
from braidties.exactmath import RF_ONE, RF_U, RatFunc
from braidties.tensor_rep import (
    TensorVector,
    act,
    act_E,
    act_T,
    act_Tinv,
    all_tensor_keys,
    faithfulness_certificate,
    quotient_checks,
    relabel_upper,
    tensor_relation_report,
    word_expand,
)


def _pure(*pairs):
    return TensorVector.pure(tuple(pairs))


def test_T_action_cases():
    # distinct uppers: plain swap
    assert act_T(1, _pure((1, 1), (2, 2))) == _pure((2, 2), (1, 1))
    # equal uppers, equal lowers: multiply by u
    assert act_T(1, _pure((1, 1), (1, 1))) == _pure((1, 1), (1, 1)).scale(RF_U)
    # equal uppers, increasing lowers: swap
    assert act_T(1, _pure((1, 1), (2, 1))) == _pure((2, 1), (1, 1))
    # equal uppers, decreasing lowers: u*swapped + (u-1)*same
    got = act_T(1, _pure((2, 1), (1, 1)))
    want = _pure((1, 1), (2, 1)).scale(RF_U) + _pure((2, 1), (1, 1)).scale(
        RF_U - RF_ONE
    )
    assert got == want


def test_E_action_cases():
    assert act_E(1, _pure((1, 1), (2, 1))) == _pure((1, 1), (2, 1))
    assert not act_E(1, _pure((1, 1), (2, 2)))


def test_Tinv_inverts():
    rng = random.Random(1)
    keys = list(all_tensor_keys(3))
    for _ in range(10):
        v = TensorVector(3, {keys[rng.randrange(len(keys))]: RF_ONE})
        for k in (1, 2):
            assert act_Tinv(k, act_T(k, v)) == v
            assert act_T(k, act_Tinv(k, v)) == v


def test_act_is_module_action():
    rng = random.Random(2)
    keys = basis_keys(3)
    tkeys = list(all_tensor_keys(3))
    for _ in range(10):
        x = AlgebraElement.basis(*keys[rng.randrange(len(keys))])
        y = AlgebraElement.basis(*keys[rng.randrange(len(keys))])
        v = TensorVector(3, {tkeys[rng.randrange(len(tkeys))]: RF_U})
        assert act(mul(x, y), v) == act(x, act(y, v))


def test_e_pair_projects_equal_uppers():
    # E_{13} acts as projection onto (upper at 1) == (upper at 3)
    from braidties.algebra_core import e_pair

    el = e_pair(1, 3, 3)
    for key in all_tensor_keys(3):
        got = act(el, TensorVector.pure(key))
        want = (
            TensorVector.pure(key)
            if key[0][1] == key[2][1]
            else TensorVector(3)
        )
        assert got == want


def test_word_expand_letters():
    a = sp_closure([(1, 3)], 3)
    w = Permutation((2, 1, 3))
    word = word_expand((a, w))
    assert word == (("T", 1), ("E", 2), ("Tinv", 1), ("T", 1))


def test_relabel_upper_commutes_with_action():
    rng = random.Random(3)
    sigma = Permutation((2, 3, 1))
    tkeys = list(all_tensor_keys(3))
    for _ in range(10):
        v = TensorVector(3, {tkeys[rng.randrange(len(tkeys))]: RF_ONE})
        for g in (gen("T", 1, 3), gen("E", 2, 3), gen("Tinv", 2, 3)):
            assert relabel_upper(sigma, act(g, v)) == act(
                g, relabel_upper(sigma, v)
            )


def test_tensor_relations_exact_n2():
    report = tensor_relation_report(2)
    assert report["mode"] == "exact"
    assert report["pass"]


def test_faithfulness_n2():
    report = faithfulness_certificate(2)
    assert report["pass"] and report["rank"] == 4


def test_faithfulness_guard():
    with pytest.raises(ValueError):
        faithfulness_certificate(5)


def test_quotients_n2():
    report = quotient_checks(2)
    assert report["pass"]
    assert report["M_Tw_rank"] == 2 and report["N_Tw_rank"] == 2
