"""Tests for integer polynomial arithmetic and the height machinery."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permpaths.errors import InvalidInputError
from permpaths.oracle import enumerate_paths
from permpaths.paths import catalan, heights
from permpaths.series import (
    bounded_height_count,
    catalan_triangle,
    catalan_triangle_inverse,
    chebyshev_p,
    chebyshev_q,
    corridor_count,
    poly_add,
    poly_mul,
    poly_shift,
    poly_sub,
    series_div,
    trim,
)

int_polys = st.lists(st.integers(-9, 9), min_size=0, max_size=6).map(tuple)


def test_poly_basics():
    assert poly_add((1, 2), (3,)) == (4, 2)
    assert poly_sub((1, 2), (1, 2)) == ()
    assert poly_mul((1, 1), (1, -1)) == (1, 0, -1)
    assert poly_mul((), (1, 2)) == ()
    assert poly_shift((3, 1)) == (0, 3, 1)
    assert trim((1, 0, 0)) == (1,)


@given(a=int_polys, b=int_polys, c=int_polys)
def test_poly_mul_distributes(a, b, c):
    assert poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c))


@given(a=int_polys, b=int_polys)
def test_series_div_inverts_mul(b, a):
    """Dividing a product by one factor recovers the other, as far as
    the requested truncation goes."""
    divisor = (1,) + b
    product = poly_mul(a, divisor)
    got = series_div(product, divisor, 8)
    want = tuple(a[i] if i < len(a) else 0 for i in range(8))
    assert got == want


def test_series_div_needs_unit_constant_term():
    with pytest.raises(InvalidInputError):
        series_div((1,), (2, 1), 5)


def test_series_div_expands_catalan():
    """C(x) = 1/(1 - x C(x)) has the Catalan numbers as coefficients;
    check against the quadratic recursion written as a division."""
    # from C = 1 + x C^2: coefficients satisfy the convolution, so
    # dividing 1 by (1 - x*C_trunc) reproduces the sequence
    c = [catalan(n) for n in range(10)]
    den = (1,) + tuple(-v for v in c[:9])
    assert series_div((1,), den, 10) == tuple(c)


def test_chebyshev_values():
    assert [chebyshev_q(h) for h in range(7)] == [
        (1,),
        (1,),
        (1, -1),
        (1, -2),
        (1, -3, 1),
        (1, -4, 3),
        (1, -5, 6, -1),
    ]
    assert [chebyshev_p(h) for h in range(6)] == [
        (2,),
        (1,),
        (1, -2),
        (1, -3),
        (1, -4, 2),
        (1, -5, 5),
    ]


def test_chebyshev_rejects_negative_index():
    with pytest.raises(InvalidInputError):
        chebyshev_q(-1)
    with pytest.raises(InvalidInputError):
        chebyshev_p(-2)


@given(h=st.integers(1, 10))
def test_q_factorization(h):
    assert chebyshev_q(2 * h - 1) == poly_mul(chebyshev_p(h), chebyshev_q(h - 1))


def test_bounded_height_values():
    # height <= 3 gives every other Fibonacci number
    assert [bounded_height_count(n, 3) for n in range(9)] == [
        1, 1, 2, 5, 13, 34, 89, 233, 610,
    ]
    assert bounded_height_count(3, 2) == 4
    assert bounded_height_count(5, 0) == 0
    assert bounded_height_count(0, 0) == 1


def test_bounded_height_saturates_at_catalan():
    for n in range(8):
        assert bounded_height_count(n, n) == catalan(n)
        assert bounded_height_count(n, n + 3) == catalan(n)


def test_corridor_values():
    # a corridor of width 1 admits exactly one zigzag per length
    assert corridor_count(5, 1, 1, 0) == 1
    assert corridor_count(0, 1, 0, 0) == 1
    # r = s = 0 pins the walk inside [0, h-1]; for h = 3 the transfer
    # matrix has dominant eigenvalue 2 and the count is exactly 2^n
    for n in range(6):
        assert corridor_count(n, 3, 0, 0) == 2**n


def test_corridor_against_enumeration():
    for n in range(5):
        for h in range(1, 4):
            for r in range(3):
                for s in range(3):
                    direct = sum(
                        1
                        for d in enumerate_paths(n + h - 1, n, lo=None, hi=None)
                        if min((0, *heights(d))) >= -r
                        and max((0, *heights(d))) <= s + h - 1
                    )
                    assert corridor_count(n, h, r, s) == direct, (n, h, r, s)


def test_triangle_shape_and_inverse():
    t = catalan_triangle(6)
    inv = catalan_triangle_inverse(6)
    assert t[5][1] == 14  # ballot(1, 4), the fourth Catalan number
    assert all(t[n][n] == 1 for n in range(7))
    assert all(t[n][k] == 0 for n in range(7) for k in range(n + 1, 7))
    # the inverse must stay in exact integers, upper zeros included
    assert all(type(v) is int for row in inv for v in row)
    for i in range(7):
        for j in range(7):
            dot = sum(t[i][k] * inv[k][j] for k in range(7))
            assert dot == (1 if i == j else 0)


def test_inverse_rows_carry_q_coefficients():
    inv = catalan_triangle_inverse(8)
    for n in range(9):
        q = chebyshev_q(n)
        assert [inv[n][n - j] for j in range(len(q))] == list(q)
