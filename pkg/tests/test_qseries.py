import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spincong.errors import InvalidInverse, OrderMismatch
from spincong.qseries import (
    TruncSeries,
    alternate,
    exact_divide,
    monomial,
    one_series,
    pochhammer,
    reduce_mod,
    schoolbook_mul,
    series_add,
    series_invert,
    series_mul,
    series_neg,
    series_pow,
    series_scale,
    series_sub,
    substitute_power,
    zero_series,
)

from oracles import naive_mul, naive_pochhammer

ORDER = 24
coeff = st.integers(min_value=-10**6, max_value=10**6)
series_st = st.lists(coeff, min_size=ORDER + 1, max_size=ORDER + 1).map(lambda c: TruncSeries(c, ORDER))
unit_series = st.tuples(st.sampled_from([1, -1]), st.lists(coeff, min_size=ORDER, max_size=ORDER)).map(
    lambda t: TruncSeries([t[0]] + t[1], ORDER)
)


@given(series_st, series_st, series_st)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + series_neg(a) == zero_series(ORDER)
    assert a * one_series(ORDER) == a


@given(series_st, series_st)
def test_mul_matches_naive(a, b):
    assert series_mul(a, b).coeffs == tuple(naive_mul(a.coeffs, b.coeffs, ORDER))
    assert schoolbook_mul(a, b) == series_mul(a, b)


@settings(max_examples=30)
@given(st.integers(1, 3), st.integers(min_value=100, max_value=400))
def test_bignum_paths_agree(bits_exp, order):
    # coefficients beyond 2^62 push the product off the int64 kernel
    big = 1 << (62 * bits_exp)
    a = TruncSeries([(big + 7 * i) * (-1) ** i for i in range(order + 1)], order)
    b = TruncSeries([(i * i - big) for i in range(order + 1)], order)
    assert series_mul(a, b) == schoolbook_mul(a, b)
    assert series_mul(a, a) == schoolbook_mul(a, a)


def test_dense_int64_path():
    order = 600
    a = TruncSeries([(i % 17) - 8 for i in range(order + 1)], order)
    b = TruncSeries([(i % 5) - 2 for i in range(order + 1)], order)
    assert series_mul(a, b) == schoolbook_mul(a, b)


@given(unit_series)
def test_invert(a):
    inv = series_invert(a)
    assert a * inv == one_series(ORDER)


def test_invert_dense_large():
    order = 3000
    a = pochhammer(1, 1, 1, order)
    assert series_mul(a, series_invert(a)) == one_series(order)


def test_invert_rejects_nonunit():
    with pytest.raises(InvalidInverse):
        series_invert(TruncSeries([2, 1, 0], 2))
    with pytest.raises(InvalidInverse):
        series_invert(zero_series(3))


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        series_add(one_series(3), one_series(4))
    with pytest.raises(OrderMismatch):
        series_mul(one_series(3), one_series(4))


@given(series_st, st.integers(0, 5))
def test_pow_matches_repeated_mul(a, k):
    expected = one_series(ORDER)
    for _ in range(k):
        expected = expected * a
    assert series_pow(a, k) == expected


def test_negative_power_via_inverse():
    a = pochhammer(1, 1, 1, 50)
    assert series_pow(a, -2) == series_pow(series_invert(a), 2)


@pytest.mark.parametrize("sign,offset,step", [(1, 1, 1), (-1, 1, 1), (1, 2, 2), (-1, 1, 2), (1, 5, 5), (-1, 3, 7)])
def test_pochhammer_against_naive(sign, offset, step):
    order = 60
    assert pochhammer(sign, offset, step, order).coeffs == tuple(naive_pochhammer(sign, offset, step, order))


def test_pochhammer_rejects_bad_arguments():
    with pytest.raises(ValueError):
        pochhammer(1, 0, 3, 10)
    with pytest.raises(ValueError):
        pochhammer(2, 1, 1, 10)


def test_pochhammer_euler_small():
    # (q;q)_inf = 1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + ...
    s = pochhammer(1, 1, 1, 15)
    assert s.coeffs == (1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1)


def test_helpers():
    s = TruncSeries([1, 2, 3, 4], 3)
    assert substitute_power(s, 2).coeffs == (1, 0, 2, 0)
    assert alternate(s).coeffs == (1, -2, 3, -4)
    assert reduce_mod(series_scale(s, -1), 3).coeffs == (2, 1, 0, 2)
    assert exact_divide(series_scale(s, 6), 3).coeffs == (2, 4, 6, 8)
    with pytest.raises(ArithmeticError):
        exact_divide(s, 2)
    assert monomial(5, 2, 3).coeffs == (0, 0, 5, 0)
    assert monomial(5, 9, 3) == zero_series(3)
    assert series_sub(s, s) == zero_series(3)


@given(series_st)
def test_json_round_trip(a):
    text = a.to_json()
    data = json.loads(text)
    assert data["order"] == ORDER
    assert all(isinstance(c, str) for c in data["coeffs"])
    assert TruncSeries.from_json(text) == a


def test_json_keeps_huge_coefficients():
    a = TruncSeries([10**40, -(10**30)], 1)
    assert TruncSeries.from_json(a.to_json()) == a


def test_immutable():
    s = one_series(2)
    with pytest.raises(AttributeError):
        s.order = 5


def test_from_list_pads_and_truncates():
    assert TruncSeries.from_list([1, 2], 3).coeffs == (1, 2, 0, 0)
    assert TruncSeries.from_list([1, 2, 3, 4, 5], 2).coeffs == (1, 2, 3)
