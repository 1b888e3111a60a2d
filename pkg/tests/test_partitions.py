import pytest
from hypothesis import given, strategies as st
from sympy import Rational

from src.partitions import (IntegerPartition, SetPartition, integer_partitions, iter_set_partitions,
                            point_with_shape, set_partition_of_point, set_partitions, shape,
                            standard_set_partition)

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]
PARTITION_COUNTS = {0: 1, 1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15, 8: 22, 9: 30, 10: 42}


def test_integer_partitions_of_three_in_order():
    assert [str(lam) for lam in integer_partitions(3)] == ['(3)', '(2,1)', '(1,1,1)']


def test_integer_partitions_of_zero():
    assert integer_partitions(0) == [IntegerPartition(())]


@pytest.mark.parametrize('n, count', sorted(PARTITION_COUNTS.items()))
def test_integer_partition_counts(n, count):
    partitions = integer_partitions(n)
    assert len(partitions) == count
    assert all(lam.n == n for lam in partitions)


def test_integer_partition_validation():
    with pytest.raises(ValueError):
        IntegerPartition((1, 2))
    with pytest.raises(ValueError):
        IntegerPartition((2, 0))
    with pytest.raises(ValueError):
        integer_partitions(-1)
    assert IntegerPartition.of([1, 3, 2]).parts == (3, 2, 1)


@pytest.mark.parametrize('n', list(range(0, 9)) + [pytest.param(n, marks=pytest.mark.slow) for n in (9, 10)])
def test_bell_numbers(n):
    assert len(set_partitions(n)) == BELL[n]


def test_set_partitions_are_distinct_and_canonical():
    partitions = set_partitions(4)
    assert len(set(partitions)) == 15
    for partition in partitions:
        assert [block[0] for block in partition.blocks] == sorted(block[0] for block in partition.blocks)


def test_set_partition_validation():
    assert SetPartition(((3,), (2, 1))).blocks == ((1, 2), (3,))
    with pytest.raises(ValueError):
        SetPartition(((1, 2), (2, 3)))
    with pytest.raises(ValueError):
        SetPartition(((1,), (3,)))


def test_set_partition_of_point():
    partition = set_partition_of_point([5, 5, 7])
    assert str(partition) == '{{1,2},{3}}'
    assert shape(partition) == IntegerPartition((2, 1))
    assert set_partition_of_point(['1/2', Rational(1, 2), '2/4']).blocks == ((1, 2, 3),)
    with pytest.raises(ValueError):
        set_partition_of_point([])


def test_standard_set_partition_and_point():
    lam = IntegerPartition((3, 1))
    assert standard_set_partition(lam).blocks == ((1, 2, 3), (4,))
    assert set_partition_of_point(point_with_shape(lam)) == standard_set_partition(lam)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=8), st.randoms())
def test_shape_is_permutation_invariant(point, random):
    permuted = list(point)
    random.shuffle(permuted)
    assert shape(set_partition_of_point(point)) == shape(set_partition_of_point(permuted))


def test_iter_set_partitions_covers_each_shape():
    shapes = {shape(p) for p in iter_set_partitions(5)}
    assert shapes == set(integer_partitions(5))
