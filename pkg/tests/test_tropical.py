import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tropid.tropical import (
    NEG_INF, DimensionError, TropMatrix, diag_equiv, eval_word_matrix, format_matrix,
    format_scalar, identity_matrix, parse_matrix, parse_scalar, scalar_ops, t_add, t_mul,
    zero_matrix,
)

SAMPLE = [NEG_INF, -3, -1, 0, 2, 5, Fraction(1, 2), Fraction(-7, 3)]

scalars = st.one_of(
    st.just(NEG_INF),
    st.integers(-20, 20),
    st.fractions(min_value=-20, max_value=20, max_denominator=12),
)


def upper(draw_a, draw_b, draw_c):
    return TropMatrix([[draw_a, draw_b], [NEG_INF, draw_c]])


uppers = st.builds(upper, scalars, scalars, scalars)
squares = st.builds(lambda v: TropMatrix([v[:2], v[2:]]), st.lists(scalars, min_size=4, max_size=4))


def test_scalar_examples():
    assert scalar_ops(3, NEG_INF) == (3, NEG_INF)
    assert scalar_ops(Fraction(1, 2), Fraction(1, 3)) == (Fraction(1, 2), Fraction(5, 6))
    assert scalar_ops(NEG_INF, NEG_INF) == (NEG_INF, NEG_INF)


def test_semiring_laws_on_sample():
    for a, b, c in itertools.product(SAMPLE, repeat=3):
        assert t_add(a, b) == t_add(b, a)
        assert t_add(t_add(a, b), c) == t_add(a, t_add(b, c))
        assert t_mul(t_mul(a, b), c) == t_mul(a, t_mul(b, c))
        assert t_mul(a, t_add(b, c)) == t_add(t_mul(a, b), t_mul(a, c))
        assert t_add(a, a) == a
    for a in SAMPLE:
        assert t_add(a, NEG_INF) == a
        assert t_mul(a, 0) == a
        assert t_mul(a, NEG_INF) is NEG_INF


def test_neg_inf_is_least():
    assert NEG_INF < -10**9
    assert not NEG_INF < NEG_INF
    assert sorted([3, NEG_INF, -2]) == [NEG_INF, -2, 3]


@given(scalars)
def test_scalar_text_round_trip(a):
    assert parse_scalar(format_scalar(a)) == a


def test_embedding_products():
    A = parse_matrix("[-1,1;-inf,1]")
    B = parse_matrix("[1,1;-inf,-1]")
    E = A @ B
    assert E == parse_matrix("[0,0;-inf,0]")
    assert E @ A == A and A @ E == A
    assert E @ B == B and B @ E == B


def test_identity_and_zero():
    I = identity_matrix(3)
    Z = zero_matrix(3)
    M = TropMatrix([[1, NEG_INF, 2], [0, 0, 0], [NEG_INF, 5, -1]])
    assert I @ M == M == M @ I
    assert Z @ M == Z
    assert M + Z == M


@given(squares, squares, squares)
def test_product_is_associative(X, Y, Z):
    assert (X @ Y) @ Z == X @ (Y @ Z)


@given(uppers, uppers)
def test_upper_triangular_closed(X, Y):
    P = X @ Y
    assert P.is_upper_triangular()
    assert P.diagonal() == tuple(t_mul(a, b) for a, b in zip(X.diagonal(), Y.diagonal()))


@given(uppers, uppers)
def test_products_in_either_order_share_diagonal(X, Y):
    assert diag_equiv(X @ Y, Y @ X)


def test_three_by_three_product():
    X = TropMatrix([[0, 1, NEG_INF], [2, NEG_INF, 0], [1, 1, 1]])
    Y = TropMatrix([[1, 0, 0], [NEG_INF, 3, 1], [0, NEG_INF, 2]])
    expected = [[1, 4, 2], [3, 2, 2], [2, 4, 3]]
    assert (X @ Y).rows == tuple(map(tuple, expected))


def test_power_matches_repeated_product():
    M = parse_matrix("[1,2;-inf,0]")
    assert M.power(0) == identity_matrix(2)
    assert M.power(3) == M @ M @ M


def test_dimension_errors():
    with pytest.raises(DimensionError):
        identity_matrix(2) @ identity_matrix(3)
    with pytest.raises(DimensionError):
        TropMatrix([[1, 2], [3]])
    with pytest.raises(DimensionError):
        eval_word_matrix("xy", {"x": identity_matrix(2), "y": identity_matrix(3)})


def test_eval_word_matrix():
    A = parse_matrix("[-1,1;-inf,1]")
    B = parse_matrix("[1,1;-inf,-1]")
    assert eval_word_matrix("AB", {"A": A, "B": B}) == A @ B
    with pytest.raises(KeyError):
        eval_word_matrix("AC", {"A": A})


def test_matrix_text_round_trip():
    text = "[1/2,-inf;3,-4]"
    assert format_matrix(parse_matrix(text)) == text
    with pytest.raises(ValueError):
        parse_matrix("1,2;3,4")
    with pytest.raises(TypeError):
        TropMatrix([[0.5, 1], [1, 1]])
