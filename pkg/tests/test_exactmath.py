"""Unit tests for exact rational-function arithmetic and sparse linear
algebra."""

import random
from fractions import Fraction

import pytest

from braidties.exactmath import (
    ExactMathError,
    RF_ONE,
    RF_U,
    RF_ZERO,
    RatFunc,
    SparseMatrix,
    rank,
    rank_exact,
    row_reduce,
    span_closure,
)


def test_canonical_form():
    # (u^2 - 1)/(u - 1) reduces to u + 1
    x = RatFunc((-1, 0, 1), (-1, 1))
    assert x == RF_U + 1
    assert str(x) == "u + 1"
    # denominators are monic
    y = RatFunc(1, (0, 2))
    assert y.den == (Fraction(0), Fraction(1))
    assert y.num == (Fraction(1, 2),)


def test_field_axioms_random():
    rng = random.Random(1)

    def rand():
        num = tuple(rng.randint(-3, 3) for _ in range(3))
        den = tuple(rng.randint(-3, 3) for _ in range(2))
        try:
            return RatFunc(num, den)
        except ExactMathError:
            return RF_ONE
    for _ in range(50):
        a, b, c = rand(), rand(), rand()
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a - a == RF_ZERO
        if a:
            assert a * a.inverse() == RF_ONE
            assert a ** 3 == a * a * a
            assert a ** -2 == (a * a).inverse()


def test_eval_and_poles():
    x = RatFunc((1, 1), (-2, 1))  # (u+1)/(u-2)
    assert x.eval(3) == 4
    with pytest.raises(ExactMathError):
        x.eval(2)
    with pytest.raises(ExactMathError):
        RatFunc(1, 0)


def test_json_roundtrip():
    x = RatFunc((Fraction(1, 3), -2), (0, 0, 1))
    assert RatFunc.from_json(x.to_json()) == x


def test_hash_consistency():
    assert hash(RatFunc((0, 2), 2)) == hash(RF_U)
    assert len({RF_U, RatFunc((0, 1)), RF_ONE}) == 2


def test_row_reduce_rank():
    rows = [{0: RF_ONE, 1: RF_U}, {0: RF_U, 1: RF_U * RF_U}, {2: RF_ONE}]
    basis = row_reduce(rows)
    assert len(basis) == 2  # row 2 = u * row 1
    assert rank_exact(SparseMatrix(3, 3, {
        (0, 0): RF_ONE, (0, 1): RF_U,
        (1, 0): RF_U, (1, 1): RF_U * RF_U,
        (2, 2): RF_ONE,
    })) == 2


def test_rank_random_matches_exact():
    rng = random.Random(7)
    for _ in range(5):
        entries = {}
        for i in range(4):
            for j in range(4):
                if rng.random() < 0.6:
                    entries[(i, j)] = RatFunc(
                        (rng.randint(-2, 2), rng.randint(-2, 2))
                    )
        m = SparseMatrix(4, 4, entries)
        assert rank(m, rng=random.Random(0)) == rank_exact(m)


def test_span_closure_cyclic_shift():
    # seed {e1}, step = cyclic shift in dimension 3 -> basis of the full space
    def shift(vec):
        return {(k + 1) % 3: c for k, c in vec.items()}

    basis = span_closure([{0: RF_ONE}], [shift])
    assert len(basis) == 3


def test_span_closure_invariant_line():
    def double(vec):
        return {k: c * 2 for k, c in vec.items()}

    assert len(span_closure([{0: RF_ONE}], [double])) == 1
