import pytest
from hypothesis import given
from hypothesis import strategies as st

from spincong.barcomb import (
    BarPartition,
    Partition,
    SignedBarClass,
    bar_lengths,
    bar_sign,
    check_odd_prime,
    enumerate_bar_partitions,
    enumerate_p_bar_cores,
    enumerate_partitions,
    hook_lengths,
    is_p_bar_core,
    is_t_core,
)
from spincong.errors import InvalidPrime

from oracles import is_bar_core_by_removal, partition_count, strict_partitions

strict_st = st.sets(st.integers(1, 30), max_size=7).map(lambda s: BarPartition(tuple(sorted(s, reverse=True))))


def test_bar_lengths_5_3_2_rows():
    table = bar_lengths(BarPartition((5, 3, 2)))
    assert table.rows == ((8, 7, 5, 4, 1), (5, 3, 2), (2, 1))
    assert table.to_dict() == {"rows": [[8, 7, 5, 4, 1], [5, 3, 2], [2, 1]]}


@given(strict_st)
def test_row_sizes_equal_parts(lam):
    # row i of the shifted diagram has a_i boxes
    table = bar_lengths(lam)
    assert [len(r) for r in table.rows] == list(lam.parts)
    assert len(table.flat()) == lam.n


@given(strict_st)
def test_bar_lengths_positive_and_bounded(lam):
    for row, a in zip(bar_lengths(lam).rows, lam.parts):
        assert all(h >= 1 for h in row)
        assert max(row) <= 2 * a


def test_partition_counts():
    for n in range(0, 25):
        assert len(enumerate_partitions(n)) == partition_count(n)


def test_bar_partition_enumeration_matches_oracle():
    for n in range(0, 30):
        got = [lam.parts for lam in enumerate_bar_partitions(n)]
        assert got == list(strict_partitions(n))
        assert len(set(got)) == len(got)


def test_enumeration_order_is_reverse_lex():
    got = [lam.parts for lam in enumerate_bar_partitions(12)]
    assert got == sorted(got, reverse=True)
    assert [lam.parts for lam in enumerate_partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_validation():
    with pytest.raises(ValueError):
        BarPartition((3, 3))
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        BarPartition((2, 0))


def test_hook_lengths_small():
    assert hook_lengths(Partition((3, 1))) == [[4, 2, 1], [1]]
    assert is_t_core(Partition((3, 1)), 3)
    assert not is_t_core(Partition((3, 1)), 2)


def test_bar_sign():
    assert bar_sign(BarPartition((5, 3, 2))) is SignedBarClass.NEGATIVE
    assert bar_sign(BarPartition((4, 2, 1))) is SignedBarClass.POSITIVE
    assert bar_sign(BarPartition(())) is SignedBarClass.POSITIVE


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_core_test_matches_removal_oracle(p):
    for n in range(0, 31):
        for lam in enumerate_bar_partitions(n):
            assert is_p_bar_core(lam, p) == is_bar_core_by_removal(lam.parts, p), (lam, p)


def test_example_cores_n31_p7():
    cores = [lam.parts for lam in enumerate_p_bar_cores(31, 7)]
    assert cores == [(17, 10, 3, 1), (16, 9, 4, 2), (16, 9, 3, 2, 1), (12, 10, 5, 3, 1)]
    assert (16, 9, 5, 2) not in cores and sum((16, 9, 5, 2)) == 32


@pytest.mark.parametrize("bad", [1, 2, 4, 9, 15, -3, 0])
def test_check_odd_prime_rejects(bad):
    with pytest.raises(InvalidPrime):
        check_odd_prime(bad)
    with pytest.raises(InvalidPrime):
        enumerate_p_bar_cores(5, bad)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_core_test_matches_bar_length_table(p):
    for n in range(0, 26):
        for lam in enumerate_bar_partitions(n):
            assert is_p_bar_core(lam, p) == (bar_lengths(lam).multiset[p] == 0)
