"""Monomial order properties: totality, multiplicativity, 1 is least."""

from hypothesis import given, strategies as st

from transferideals.kernel import exp_add
from transferideals.orders import (
    EQ,
    GT,
    LT,
    Block,
    Grevlex,
    Lex,
    WeightThen,
    order_compare,
    order_from_name,
)

N = 5
exps = st.tuples(*[st.integers(0, 8)] * N)
ORDERS = [Lex(), Grevlex(), Block(2), WeightThen((3, 1, 1, 1, 2))]


@given(exps, exps)
def test_total_and_antisymmetric(a, b):
    for order in ORDERS:
        c = order_compare(order, a, b)
        assert c in (LT, EQ, GT)
        assert (c == EQ) == (a == b)
        assert order_compare(order, b, a) == -c


@given(exps, exps, exps)
def test_multiplicative(a, b, m):
    for order in ORDERS:
        c = order_compare(order, a, b)
        assert order_compare(order, exp_add(a, m), exp_add(b, m)) == c


@given(exps)
def test_one_is_smallest(a):
    zero = (0,) * N
    for order in ORDERS:
        if a != zero:
            assert order_compare(order, a, zero) == GT


def test_grevlex_examples():
    g = Grevlex()
    # degree first
    assert order_compare(g, (2, 0, 0, 0, 0), (1, 1, 1, 0, 0)) == LT
    # e3*e4 > e1*e5 at equal degree (smaller last variable wins)
    assert order_compare(g, (0, 0, 1, 1, 0), (1, 0, 0, 0, 1)) == GT


def test_block_eliminates_leading_variables():
    b = Block(1)
    # any power of the first variable beats anything without it
    assert order_compare(b, (1, 0, 0, 0, 0), (0, 9, 9, 9, 9)) == GT
    # within the tail block it agrees with grevlex
    assert order_compare(b, (0, 1, 0, 0, 1), (0, 0, 0, 1, 1)) == GT


def test_order_from_name_round_trip():
    assert order_from_name("lex") == Lex()
    assert order_from_name("grevlex") == Grevlex()
    assert order_from_name("block(3)") == Block(3)
