from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from taulab import sympoly as sp
from taulab.partitions import Partition, partitions_in_box
from conftest import rationals

three = st.lists(rationals(), min_size=3, max_size=3, unique=True)


def test_small_values():
    assert sp.elementary(2, [1, 2, 3]) == 11
    assert sp.schur_eval(Partition((1,)), [F(2), F(5)]) == 7
    assert sp.schur_eval(Partition((2, 1)), [1, 2]) == 6
    assert sp.schur_eval(Partition((1, 1, 1)), [1, 2]) == 0
    assert sp.skew_schur_eval(Partition((2, 1)), Partition((1,)), [1, 1]) == 4
    assert sp.skew_schur_eval(Partition((2,)), Partition((1, 1)), [1, 2]) == 0


def test_character_two():
    x = sp.TimeVector([F(3), F(5)])
    assert sp.character(2, x) == F(9, 2) + 5


def test_miwa_example():
    assert list(sp.miwa_times([1, 1], 2)) == [2, 1]
    assert all(a == 0 for a in sp.miwa_times([], 3))


@given(three, rationals())
def test_t_complete_low_orders(u, t):
    assert sp.t_complete(0, u, t) == 1
    assert sp.t_complete(1, u, t) == (1 - t) * sum(u)


@given(three)
def test_schur_routes_agree(u):
    for lam in partitions_in_box(3, 3):
        vals = {sp.schur_eval(lam, u, m) for m in ("jacobi_trudi", "bialternant", "tableau", "dual_jacobi_trudi")}
        assert len(vals) == 1


@given(three)
def test_miwa_characters_are_schur(u):
    x = sp.miwa_times(u, 6)
    for k in range(7):
        assert sp.character(k, x) == sp.complete(k, u)
    for lam in partitions_in_box(2, 3):
        assert sp.character_poly(lam, x) == sp.schur_eval(lam, u)


@given(three, rationals())
def test_hall_littlewood_limits(u, t):
    for lam in partitions_in_box(3, 2):
        assert sp.hall_littlewood_eval(lam, u, 0) == sp.schur_eval(lam, u)
    assert sp.hall_littlewood_eval(Partition((1,)), u, t) == sum(u)


@given(three, rationals())
def test_t_schur_one_box(u, t):
    assert sp.tschur_eval(Partition((1,)), u, t) == (1 - t) * sum(u)
    assert sp.tschur_eval(Partition((2, 1)), u, 0) == sp.schur_eval(Partition((2, 1)), u)


@given(three)
def test_symmetry_under_permutation(u):
    lam = Partition((2, 1))
    assert sp.schur_eval(lam, u) == sp.schur_eval(lam, u[::-1])
