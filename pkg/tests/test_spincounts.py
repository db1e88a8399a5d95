import csv
import io
import json
import math

import pytest

from spincong.barcomb import BarPartition, enumerate_bar_partitions, is_p_bar_core
from spincong.qseries import alternate, pochhammer, series_mul, series_pow
from spincong.spincounts import (
    Group,
    count_defect_zero,
    count_spin_chars,
    degree_bar_form,
    degree_product_form,
    gf_bar_core,
    gf_bar_core_signed,
    gf_defect_zero,
    gf_distinct_parts,
    gf_partitions,
    gf_spin_chars,
    nu_p,
    nu_p_degree,
    nu_p_factorial,
    p_defect,
    records_by_enumeration,
    records_by_series,
    records_to_csv,
    records_to_json,
    signed_core_difference,
    spin_degree,
    strict_sign_counts,
    strict_sign_counts_dp,
    WALK_LIMIT,
)

from oracles import partition_count, shifted_syt_count, spin_count_brute, strict_partitions


def test_degree_5_3_2():
    lam = BarPartition((5, 3, 2))
    # 54 shifted standard tableaux, times 2^floor((10 - 3)/2)
    assert shifted_syt_count((5, 3, 2)) == 54
    assert degree_bar_form(lam) == degree_product_form(lam) == 8 * 54 == 432
    assert spin_degree(lam, [3, 5]).defects == {3: 1, 5: 2}
    # the valuation of the degree itself is 3 at p = 3 (432 = 2^4 * 3^3)
    assert nu_p_degree(lam, 3) == 3


@pytest.mark.parametrize("parts,deg", [((1,), 1), ((2,), 1), ((2, 1), 1), ((7,), 8), ((4, 2, 1), 28)])
def test_small_degrees(parts, deg):
    assert spin_degree(BarPartition(parts)).degree == deg


def test_degree_matches_shifted_tableaux():
    for n in range(1, 15):
        for lam in enumerate_bar_partitions(n):
            g = shifted_syt_count(lam.parts)
            assert degree_bar_form(lam) == 2 ** ((n - lam.length) // 2) * g


def test_degrees_square_sum():
    # associate pairs (n - m odd) contribute two characters of the same degree
    for n in range(1, 19):
        total = sum(
            (1 if (n - lam.length) % 2 == 0 else 2) * degree_bar_form(lam) ** 2
            for lam in enumerate_bar_partitions(n)
        )
        assert total == math.factorial(n)


def test_closed_forms_agree():
    for n in range(1, 21):
        for lam in enumerate_bar_partitions(n):
            assert degree_product_form(lam) == degree_bar_form(lam)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_defect_zero_iff_core(p):
    for n in range(1, 25):
        for lam in enumerate_bar_partitions(n):
            d = p_defect(lam, p)
            assert (d == 0) == is_p_bar_core(lam, p)
            assert d + nu_p_degree(lam, p) == nu_p_factorial(n, p)


def test_valuations():
    assert nu_p(250, 5) == 3
    assert nu_p_factorial(100, 5) == 24
    assert nu_p_factorial(0, 3) == 0
    with pytest.raises(ValueError):
        nu_p(0, 3)


def test_counts_match_brute_force():
    for n in range(0, 30):
        s, a = spin_count_brute(n)
        assert count_spin_chars(n, Group.SYMMETRIC) == s
        assert count_spin_chars(n, Group.ALTERNATING) == a


def test_walk_and_dp_agree():
    assert strict_sign_counts(WALK_LIMIT) == strict_sign_counts_dp(WALK_LIMIT)
    plus, minus = strict_sign_counts_dp(40)
    for n in range(41):
        assert plus[n] + minus[n] == len(list(strict_partitions(n)))


def test_spot_values():
    assert count_spin_chars(7, Group.SYMMETRIC) == 8
    assert count_spin_chars(7, Group.ALTERNATING) == 7
    assert count_defect_zero(31, Group.SYMMETRIC, 7) == 6
    assert count_defect_zero(31, Group.ALTERNATING, 7) == 6
    assert gf_bar_core(7, 40)[31] == 4


def test_constant_terms():
    assert gf_spin_chars(Group.SYMMETRIC, 0).coeffs == (1,)
    assert gf_spin_chars(Group.ALTERNATING, 0).coeffs == (2,)
    assert gf_defect_zero(Group.SYMMETRIC, 5, 0).coeffs == (1,)
    assert gf_defect_zero(Group.ALTERNATING, 5, 0).coeffs == (2,)


def test_basic_generating_functions():
    assert [gf_partitions(30)[n] for n in range(31)] == [partition_count(n) for n in range(31)]
    assert [gf_distinct_parts(30)[n] for n in range(31)] == [len(list(strict_partitions(n))) for n in range(31)]


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_series_equal_enumeration(p):
    n_max = 120
    enum = records_by_enumeration(n_max, [p])
    series = records_by_series(n_max, [p])
    for e, s in zip(enum, series):
        assert (e.f_S_hat, e.f_A_hat, e.primes[p]) == (s.f_S_hat, s.f_A_hat, s.primes[p])


@pytest.mark.parametrize("p", [3, 5, 7])
def test_signed_difference_exponent(p):
    # the default exponent (p-1)/2 is the one that matches the enumerated signs
    plus, minus = gf_bar_core_signed(p, 60)
    diff = signed_core_difference(p, 60)
    assert diff.coeffs == tuple(a - b for a, b in zip(plus.coeffs, minus.coeffs))
    enum = records_by_enumeration(60, [p])
    assert [r.primes[p].f_pbar_plus - r.primes[p].f_pbar_minus for r in enum] == list(diff.coeffs)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_signed_difference_with_t_equal_p_disagrees(p):
    enum = records_by_enumeration(60, [p])
    wanted = [r.primes[p].f_pbar_plus - r.primes[p].f_pbar_minus for r in enum]
    assert list(signed_core_difference(p, 60, t=p).coeffs) != wanted


def test_signed_difference_closed_form():
    # (-q;-q)_inf (-q^p;-q^p)_inf^(t-1), t = (p-1)/2, via q -> -q on Euler products
    p, order = 7, 80
    t = (p - 1) // 2
    expected = series_mul(
        alternate(pochhammer(1, 1, 1, order)),
        series_pow(alternate(pochhammer(1, p, p, order)), t - 1),
    )
    assert signed_core_difference(p, order) == expected


def test_record_exports():
    recs = records_by_series(5, [3])
    rows = list(csv.reader(io.StringIO(records_to_csv(recs))))
    assert rows[0][:3] == ["n", "f_S_hat", "f_A_hat"]
    assert rows[0][3:] == ["f_pbar_p3", "f_pbar_plus_p3", "f_pbar_minus_p3", "f0_S_p3", "f0_A_p3"]
    assert len(rows) == 7
    data = json.loads(records_to_json(recs))
    assert data[0]["f_A_hat"] == 2 and data[0]["primes"]["3"]["f0_A"] == 2
