import random

import mpmath
import pytest
from hypothesis import given, strategies as st

from taulab import height_models as hm

TOL = mpmath.mpf("1e-30")


def close(a, b, tol=TOL):
    with mpmath.workdps(60):
        return hm.relative_residual(a, b) < tol


@pytest.fixture(scope="module")
def theta():
    return hm.ThetaParams(mpmath.mpf("0.23"))


def test_precision_floor():
    with pytest.raises(ValueError):
        hm.ThetaParams(mpmath.mpf("0.2"), dps=20)
    with pytest.raises(ValueError):
        hm.ThetaParams(mpmath.mpf("1.5"))


@given(st.integers(-900, 900), st.integers(-300, 300))
def test_theta_matches_series(re_milli, im_milli):
    th = hm.ThetaParams(mpmath.mpf("0.23"))
    with mpmath.workdps(60):
        u = th.K1 * re_milli / 1000 + 1j * th.K2 * im_milli / 1000
        for k in hm.THETA_KINDS:
            a, b = hm.theta_eval(k, u, th), hm.theta_reference(k, u, th)
            scale = hm.theta_eval(k, th.K1 if k in ("H", "Theta") else 0, th)
            assert hm.scaled_residual(a, b, scale) < TOL


def test_theta_zeros(theta):
    with mpmath.workdps(60):
        scale = abs(hm.theta_eval("H", theta.K1, theta))
        assert abs(hm.theta_eval("H", 0, theta)) / scale < TOL
        assert abs(hm.theta_eval("H", 2 * theta.K1 + 2j * theta.K2, theta)) / scale < TOL
        assert abs(hm.theta_eval("Theta", 1j * theta.K2, theta)) / scale < TOL


def test_theta_quasi_periods(theta):
    th = theta
    with mpmath.workdps(60):
        u = mpmath.mpf("0.377") * th.K1 + 0.2j * th.K2
        H = lambda z: hm.theta_eval("H", z, th)  # noqa: E731
        assert close(H(-u), -H(u))
        assert close(H(u + 2 * th.K1), -H(u))
        for n in (1, 2):
            f = (-1) ** n * th.nome ** (-n * n) * mpmath.exp(-1j * n * mpmath.pi * u / th.K1)
            assert close(H(u + 2j * n * th.K2), f * H(u))


def _params(kind, N, seed, **kw):
    return hm.sample_params(kind, N, random.Random(seed), **kw)


def test_sampling_is_reproducible():
    a = _params("bsos", 3, 5)
    b = _params("bsos", 3, 5)
    assert a == b


def test_bsos_size_one():
    p = _params("bsos", 1, 1)
    br = hm._bracket_bsos(p)
    with mpmath.workdps(60):
        x = p.u[0] - p.v[0]
        expected = br(p.zeta - x) / br(p.zeta)
    assert close(hm.bsos_dwpf(1, p, "bruteforce"), expected)
    assert close(hm.bsos_dwpf(1, p, "permutation_sum"), expected)


def test_bsos_size_two_explicit_sum():
    p = _params("bsos", 2, 2)
    br = hm._bracket_bsos(p)
    (u1, u2), (v1, v2), z = p.u, p.v, p.zeta
    with mpmath.workdps(60):
        WA = lambda x: br(x + 1) / br(1)  # noqa: E731
        WB = lambda x: br(x) / br(1)  # noqa: E731
        WC = lambda l, x: br(z + l - x) / br(z + l)  # noqa: E731
        f1 = lambda a, b: br(a - b + 1) / br(a - b)  # noqa: E731
        expected = (WB(u1 - v2) * f1(u1, u2) * WA(u2 - v1) * WC(1, u1 - v1) * WC(0, u2 - v2)
                    + WB(u2 - v2) * f1(u2, u1) * WA(u1 - v1) * WC(1, u2 - v1) * WC(0, u1 - v2))
    assert close(hm.bsos_dwpf(2, p, "bruteforce"), expected)


@pytest.mark.parametrize("N", [2, 3])
def test_bsos_routes_and_recursion(N):
    p = _params("bsos", N, 10 + N)
    assert close(hm.bsos_dwpf(N, p, "bruteforce"), hm.bsos_dwpf(N, p, "permutation_sum"))
    assert close(*hm.bsos_recursion_sides(p))


def test_ps_trig_size_one():
    p = _params("ps_trig", 1, 3, r=1, s=1)
    with mpmath.workdps(60):
        expected = mpmath.exp(p.eta * (p.u[0] - p.v[0]))
    assert close(hm.ps_trig_dwpf(1, p, "bruteforce"), expected)
    assert close(hm.ps_trig_dwpf(1, p, "product"), expected)


@pytest.mark.parametrize("N,r,s", [(2, 0, 0), (2, 1, 2), (3, 1, 1), (3, 2, 0)])
def test_ps_trig_routes_and_relations(N, r, s):
    p = _params("ps_trig", N, 20 + N, r=r, s=s)
    assert close(hm.ps_trig_dwpf(N, p, "bruteforce"), hm.ps_trig_dwpf(N, p, "product"))
    assert close(*hm.ps_trig_recursion_sides(p, "top"))
    assert close(*hm.ps_trig_recursion_sides(p, "bottom"))
    assert close(*hm.ps_trig_line_permutation_sides(p))


def test_ps_trig_weight_table():
    eta, s = mpmath.mpf("0.4"), 1  # colours 1,2 odd-grade; 3 even-grade
    x = mpmath.mpf("0.3")
    sh = mpmath.sinh(eta)
    assert hm.ps_trig_weight(1, 1, 1, 1, x, eta, s) == mpmath.sinh(eta * (1 - x)) / sh
    assert hm.ps_trig_weight(3, 3, 3, 3, x, eta, s) == mpmath.sinh(eta * (1 + x)) / sh
    assert hm.ps_trig_weight(1, 2, 2, 1, x, eta, s) == -mpmath.sinh(eta * x) / sh
    assert hm.ps_trig_weight(1, 3, 3, 1, x, eta, s) == mpmath.sinh(eta * x) / sh
    assert hm.ps_trig_weight(1, 3, 1, 3, x, eta, s) == mpmath.exp(eta * x)
    assert hm.ps_trig_weight(3, 1, 3, 1, x, eta, s) == mpmath.exp(-eta * x)
    assert hm.ps_trig_weight(1, 2, 3, 1, x, eta, s) == 0


def test_ps_elliptic_size_one():
    p = _params("ps_elliptic", 1, 4)
    br = hm._bracket_ps(p)
    with mpmath.workdps(60):
        expected = br(p.a0 - (p.u[0] - p.v[0])) / br(p.a0)
    assert close(hm.ps_elliptic_dwpf(1, p, "bruteforce"), expected)
    assert close(hm.ps_elliptic_dwpf(1, p, "product"), expected)


@pytest.mark.parametrize("N", [2, 3])
def test_ps_elliptic_routes_and_periodicity(N):
    p = _params("ps_elliptic", N, 30 + N)
    assert close(hm.ps_elliptic_dwpf(N, p, "bruteforce"), hm.ps_elliptic_dwpf(N, p, "product"))
    assert close(*hm.ps_elliptic_recursion_sides(p))
    for a, b in hm.ps_elliptic_quasi_periodicity(p, "bruteforce"):
        assert close(a, b)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_elliptic_identity(N):
    for seed in range(2):
        p = _params("ps_elliptic", N, 40 + 3 * N + seed)
        assert hm.elliptic_identity_residual(N, p) < TOL


def test_four_theta_identity_random(theta):
    rng = random.Random(9)
    with mpmath.workdps(60):
        for _ in range(5):
            x, y, u, v = (mpmath.mpf(rng.randint(-999, 999)) / 1000 for _ in range(4))
            assert close(*hm.simple_identity_sides(x, y, u, v, theta))


def test_two_term_reduction():
    p = _params("ps_elliptic", 2, 77)
    lhs, rhs = hm.elliptic_identity_sides(p)
    u, v, x, y = hm.simple_substitution(p)
    a, b = hm.simple_identity_sides(x, y, u, v, p.theta)
    assert close(a, lhs) and close(b, rhs)


def test_elliptic_identity_needs_two():
    p = _params("ps_elliptic", 1, 5)
    with pytest.raises(ValueError):
        hm.elliptic_identity_residual(1, p)
