from fractions import Fraction as F
import random

import pytest
from hypothesis import given, strategies as st

from taulab import six_vertex as sv
from taulab import toda as td
from taulab.checks import Sampler, _spectral_point, _toda_family
from taulab.exact_core import ExactMatrix
from taulab.sympoly import TimeVector
from conftest import rationals


def test_dressing_at_zero_times_is_identity_map():
    A = ExactMatrix.from_rows([[F(2), F(1)], [F(3), F(5)]])
    fam = td.TodaFamily(0, 2, A, TimeVector([0]), TimeVector([0]))
    assert td.dressed_matrix(fam) == A


@given(rationals(), rationals())
def test_two_by_two_dressing(a, b):
    fam = td.TodaFamily(0, 2, ExactMatrix.identity(2), TimeVector([a]), TimeVector([b]))
    assert td.dressed_matrix(fam).to_rows() == [[1 - a * b, a], [-b, 1]]


def test_identity_family_has_unit_tau():
    fam = td.TodaFamily(0, 4, ExactMatrix.identity(4), TimeVector([0] * 3), TimeVector([0] * 3))
    assert all(td.tau_family(fam, s) == 1 for s in range(5))


@pytest.mark.parametrize("L", [2, 3, 4, 5])
def test_bilinear_identity(L):
    smp = Sampler(100 + L)
    for _ in range(3):
        f = _toda_family(smp, L)
        for s in range(1, L):
            for s2 in range(1, L + 1):
                lhs, rhs = td.bilinear_residues(f, s, s2, smp.rationals(L - 1), smp.rationals(L - 1))
                assert lhs == rhs


def test_bilinear_identity_trivial_case():
    smp = Sampler(5)
    f = _toda_family(smp, 3)
    lhs, rhs = td.bilinear_residues(f, 2, 2, list(f.x), list(f.y))
    assert lhs == rhs


@pytest.mark.parametrize("L", [2, 3, 4, 5])
def test_molecule_equation(L):
    f = _toda_family(Sampler(L), L)
    for s in range(1, L):
        lhs, rhs = td.toda_molecule_residual(f, s)
        assert lhs == rhs


@pytest.mark.parametrize("L", [1, 2, 3, 4])
def test_double_schur_expansion(L):
    f = _toda_family(Sampler(7 * L), L)
    for s in range(L + 1):
        assert td.tau_polynomial(f, s) == td.tau_family(f, s)


def test_wave_generating_functions():
    f = _toda_family(Sampler(11), 3)
    for which in td.WAVE_KINDS:
        for s in (1, 2):
            lhs, rhs = td.generating_function_sides(f, which, s, F(3, 7))
            assert lhs == rhs


def test_dressing_relation():
    f = _toda_family(Sampler(3), 4)
    W, W0 = td.hatted_wave_matrices(f)
    assert W0 == W @ td.dressed_matrix(f)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_kp_hirota_on_lascoux_tau(N):
    smp = Sampler(N)
    pt = smp.generic(lambda s: _spectral_point(s, N))
    for _ in range(3):
        tau = td.character_tau_jet(sv.schur_coeffs(N, pt), smp.rationals(N * (N - 1)))
        assert td.kp_hirota_value(tau) == 0


def test_kp_detects_non_tau():
    # a generic combination of characters is not a KP tau-function
    from taulab.partitions import Partition
    coeffs = {Partition(()): F(1), Partition((2, 2)): F(3), Partition((1,)): F(2)}
    tau = td.character_tau_jet(coeffs, [F(1, 2), F(1, 3), F(2), F(1)])
    assert td.kp_hirota_value(tau) != 0


@given(st.lists(rationals(), min_size=9, max_size=9, unique=True), rationals())
def test_t_deformed_tau_product(uv, t):
    u, v = uv[:3], uv[3:6]
    assert td.t_deformed_tau_series(u, v, t, 3) == td.hall_littlewood_product_series(u, v, t, 3)


def test_t_deformed_box_edge_cases():
    u, v = [F(1, 2), F(2)], [F(3), F(-1, 4)]
    assert td.t_deformed_tau(2, 2, 0, u, v, F(1, 3)) == 1


@given(st.lists(rationals(), min_size=16, max_size=16))
def test_desnanot_jacobi(xs):
    M = ExactMatrix.from_rows([xs[4 * i:4 * i + 4] for i in range(4)])
    lhs, rhs = td.jacobi_identity_sides(M)
    assert lhs == rhs
