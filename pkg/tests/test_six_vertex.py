from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from taulab import six_vertex as sv
from taulab.checks import Sampler, _spectral_point
from taulab.partitions import Partition
from conftest import rationals


def point(seed, N, M=0):
    return Sampler(seed).generic(lambda s: _spectral_point(s, N, M))


def test_configuration_counts():
    assert [sv.configuration_count(n) for n in range(1, 5)] == [1, 2, 7, 42]


def test_size_one_values():
    pt = sv.SpectralPoint([F(2, 3)], [F(5, 7)], F(3, 4))
    assert sv.dwpf(1, pt, "izergin").value == sv.upsilon(1, pt) == 1
    assert sv.kappa_matrix(1, pt) == [[1]]
    assert sv.dwpf(1, pt, "bruteforce").value == (1 - pt.q) / (2 * pt.p)


def test_empty_partition_coefficient():
    pt = point(3, 2)
    assert sv.schur_coeffs(1, point(2, 1))[Partition(())] == 1
    assert sv.schur_coeffs(2, pt)[Partition(())] == (pt.q + 1) * pt.v[0] * pt.v[1]


def test_zero_variable_rejected():
    with pytest.raises(sv.DegenerateSpectralPoint):
        sv.SpectralPoint([0], [1], F(1, 2))


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_closed_forms_agree(N):
    for seed in range(3):
        pt = point(10 * N + seed, N)
        iz = sv.dwpf(N, pt, "izergin").value
        for m in ("lascoux", "lascoux_schur", "kirillov_smirnov"):
            assert sv.dwpf(N, pt, m).value == iz, m
        for name, form in sv.KS_FORMS.items():
            assert form(N, pt) == iz, name


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_monodromy_and_bridge(N):
    pt = point(N, N)
    brute = sv.dwpf(N, pt, "bruteforce").value
    assert sv.dwpf(N, pt, "monodromy").value == brute
    assert brute == sv.dwpf(N, pt, "izergin").value * sv.normalization_bridge(N, pt)


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_korepin_conditions(N):
    pt = point(40 + N, N)
    assert sv.korepin_symmetric(N, pt)
    lhs, rhs = sv.korepin_recursion_sides(N, pt)
    assert lhs == rhs
    probes = [F(k + 2, 3) for k in range(N + 2)]
    assert sv.korepin_degree_ok(N, pt, probes)


def test_schur_coefficients_reproduce_lascoux():
    from taulab.sympoly import schur_eval
    N = 3
    pt = point(9, N)
    total = sum(c * schur_eval(lam, pt.u) for lam, c in sv.schur_coeffs(N, pt).items())
    assert total * sv.upsilon(N, pt) == sv.dwpf(N, pt, "lascoux").value


@pytest.mark.parametrize("N,M", [(1, 2), (2, 3), (3, 3), (2, 4)])
def test_slavnov_forms(N, M):
    for seed in range(3):
        pt = point(seed + 7 * M, N, M)
        d = sv.slavnov(N, M, pt, "determinant")
        assert sv.slavnov(N, M, pt, "symmetric") == d
        assert sv.slavnov(N, M, pt, "schur") == d


@given(st.lists(rationals(), min_size=5, max_size=5, unique=True))
def test_symmetry_property(xs):
    pt = sv.SpectralPoint(xs[:2], xs[2:4], xs[4])
    if not pt.is_generic():
        return
    swapped = pt.swapped(0, 1, "x")
    assert sv.dwpf(2, pt, "izergin").value == sv.dwpf(2, swapped, "izergin").value
