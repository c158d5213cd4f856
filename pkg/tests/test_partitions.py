from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from taulab.partitions import (Partition, conjugate, hook_coordinates, occupation_to_partition,
                               partition_from_hooks, partition_to_occupation, partitions_in_box,
                               ssyt_weights)

partition_st = st.lists(st.integers(1, 6), max_size=5).map(lambda xs: Partition(sorted(xs, reverse=True)))


@pytest.mark.parametrize("lam,expected", [((), ()), ((3, 1, 1), (3, 1, 1)), ((4, 2, 1), (3, 2, 1, 1))])
def test_conjugate(lam, expected):
    assert conjugate(Partition(lam)) == Partition(expected)


@given(partition_st)
def test_conjugation_is_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


def test_hook_coordinates_examples():
    assert hook_coordinates(Partition((1,))).pairs == ((0, -1),)
    assert hook_coordinates(Partition(())).pairs == ()
    assert hook_coordinates(Partition((2, 2))).pairs == ((1, -2), (0, -1))


@given(partition_st)
def test_hooks_round_trip(lam):
    assert partition_from_hooks(hook_coordinates(lam)) == lam


@pytest.mark.parametrize("rows,cols,count", [(0, 4, 1), (2, 2, 6), (3, 2, 10), (3, 3, 20)])
def test_box_counts(rows, cols, count):
    assert len(partitions_in_box(rows, cols)) == count


def test_tableaux_examples():
    assert sorted(ssyt_weights(Partition((2, 1)), 2)) == [(1, 2), (2, 1)]
    assert ssyt_weights(Partition((1, 1, 1)), 2) == []
    skew = ssyt_weights((Partition((2, 1)), Partition((1,))), 2)
    assert sum(F(1) for _ in skew) == 4  # h_1(1,1)^2


def test_occupation_examples():
    assert occupation_to_partition((0, 2, 0, 1, 0)) == Partition((3, 1, 1))
    assert occupation_to_partition((3, 0, 0, 0)) == Partition(())
    assert occupation_to_partition((0, 0, 3)) == Partition((2, 2, 2))


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_occupation_round_trip(N, M, data):
    lam = data.draw(st.sampled_from(partitions_in_box(N, M)))
    occ = partition_to_occupation(lam, N, M)
    assert sum(occ) == N and len(occ) == M + 1
    assert occupation_to_partition(occ) == lam
