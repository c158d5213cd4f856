from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from taulab import fermion as fm
from taulab import six_vertex as sv
from taulab.checks import Sampler, _spectral_point
from taulab.partitions import HookCoordinates, Partition, partition_from_hooks
from taulab.sympoly import TimeVector, miwa_times
from conftest import rationals

modes = st.tuples(st.sampled_from([fm.PSI, fm.PSI_STAR]), st.integers(-3, 2))


def test_two_point_examples():
    assert fm.wick_expectation([(fm.PSI, -1), (fm.PSI_STAR, -1)]) == 1
    assert fm.wick_expectation([(fm.PSI_STAR, 0), (fm.PSI, 0)]) == 1
    assert fm.wick_expectation([(fm.PSI, 0), (fm.PSI_STAR, 0)]) == 0


@given(st.lists(modes, min_size=1, max_size=5).filter(lambda l: len(l) % 2 == 1))
def test_odd_strings_vanish(factors):
    assert fm.wick_expectation(factors) == 0


@given(st.lists(modes, min_size=2, max_size=6).filter(lambda l: len(l) % 2 == 0))
def test_wick_matches_normal_ordering(factors):
    assert fm.wick_expectation(factors) == fm.normal_order_expectation(factors)


def test_clifford_examples():
    v = fm.clifford_apply(1, 0, 1, fm.FockVector.vacuum())
    assert v == fm.FockVector.basis([(0, -1)])
    assert len(fm.clifford_apply(1, 0, 1, v)) == 0
    w = fm.clifford_apply(2, 1, 1, v)
    (key,), (c,) = w.terms.keys(), w.terms.values()
    assert key == HookCoordinates(((1, -2), (0, -1)))
    assert partition_from_hooks(key) == Partition((2, 2))
    assert abs(c) == 1


def test_bosonization_examples():
    x = TimeVector([F(3, 5), F(1, 2)])
    assert fm.bosonize(fm.FockVector.vacuum(), x) == 1
    # sign (-1)^{j_1+...+j_r} with j = -1
    assert fm.bosonize(fm.FockVector.basis([(0, -1)]), x) == -F(3, 5)
    v = fm.FockVector.basis([(0, -1)], 2) + fm.FockVector.vacuum()
    assert fm.bosonize(v, x) == 1 - 2 * F(3, 5)


def test_opposite_sign_rule_breaks_reconstruction():
    # with the one-hook sign flipped, the generator product no longer bosonizes to the Lascoux sum
    N = 3
    pt, mc = _master(N, N)
    gp = fm.generator_product(mc, N - 1, N)
    x = miwa_times(pt.u[:N], N * (N - 1))
    flipped = sum(c * -fm.hook_sign(k) * fm.character_poly(partition_from_hooks(k), x)
                  if len(k.pairs) == 1 else c * fm.hook_sign(k) * fm.character_poly(partition_from_hooks(k), x)
                  for k, c in gp.terms.items())
    target = sv.dwpf(N, pt, "lascoux").value / (sv.upsilon(N, pt) * mc(Partition(())))
    assert fm.bosonize(gp, x) == target
    assert flipped != target


def test_empty_generator_product():
    mc = fm.MasterCoefficients("id", [[1, 0], [0, 1], [0, 0]])
    assert fm.generator_product(mc, 0, 2) == fm.FockVector.vacuum()


def _master(seed, N, M=None):
    if M is None:
        pt = Sampler(seed).generic(lambda s: _spectral_point(s, N))
        return pt, fm.MasterCoefficients("dwpf", sv.kappa_matrix(N, pt))
    pt = Sampler(seed).generic(lambda s: _spectral_point(s, N, M))
    return pt, fm.MasterCoefficients("slavnov", sv.rho_matrix(N, M, pt))


def test_three_site_plucker_example():
    _pt, mc = _master(1, 3)
    c = mc.normalized
    bilinear = c((1,)) * c((2, 1, 1)) - c((2,)) * c((1, 1, 1))
    gp = fm.generator_product(mc, 2, 3)
    key = HookCoordinates(((1, -3), (0, -1)))
    assert partition_from_hooks(key) == Partition((2, 2, 1))
    assert gp.terms[key] == bilinear
    assert bilinear == c((2, 2, 1))


@pytest.mark.parametrize("N", [2, 3, 4])
def test_bosonization_reproduces_lascoux(N):
    pt, mc = _master(N, N)
    gp = fm.generator_product(mc, N - 1, N)
    assert fm.plucker_collapse_mismatches(mc, gp) == []
    rec = sv.upsilon(N, pt) * mc(Partition(())) * fm.bosonize(gp, miwa_times(pt.u[:N], N * (N - 1)))
    assert rec == sv.dwpf(N, pt, "lascoux").value


@pytest.mark.parametrize("N,M", [(2, 3), (3, 3), (2, 4)])
def test_bosonization_reproduces_slavnov(N, M):
    pt, mc = _master(M, N, M)
    gp = fm.generator_product(mc, M - 1, N)
    assert fm.plucker_collapse_mismatches(mc, gp) == []
    rec = sv.slavnov_upsilon_prime(N, M, pt) * mc(Partition(())) * fm.bosonize(gp, miwa_times(pt.u[:N], N * (M - 1)))
    assert rec == sv.slavnov(N, M, pt, "symmetric")


@given(st.lists(rationals(), min_size=18, max_size=18), st.data())
def test_plucker_relations(xs, data):
    mc = fm.MasterCoefficients("random", [xs[3 * i:3 * i + 3] for i in range(6)])
    mus = data.draw(st.lists(st.integers(0, 5), min_size=2, max_size=2))
    nus = data.draw(st.lists(st.integers(0, 5), min_size=4, max_size=4))
    assert fm.plucker_residual(mc, mus, nus) == 0


@pytest.mark.parametrize("p", [1, 2, 3])
@pytest.mark.parametrize("dual", [False, True])
def test_cauchy_determinant_via_wick(p, dual):
    k = [F(2 * i + 1, 3) for i in range(p)]
    l = [F(-i - 2, 5) for i in range(p)]
    a, b = fm.cauchy_wick_sides(k, l, p + 3, dual)
    assert a == b
