"""Acceptance criteria 1-13, one test each; a PASS/FAIL line is printed per criterion."""

import itertools
import json
import os
import subprocess
import sys
import time

import mpmath
import pytest

from taulab import felderhof as fh
from taulab import fermion as fm
from taulab import height_models as hm
from taulab import phase_model as pm
from taulab import six_vertex as sv
from taulab import toda as td
from taulab.checks import Sampler, _colour_point, _phase_uv, _spectral_point, _toda_family
from taulab.partitions import HookCoordinates, Partition
from taulab.sympoly import miwa_times
from conftest import record_acceptance

TOL = mpmath.mpf("1e-30")
POINTS = 10


def spectral(smp, N, M=0):
    return smp.generic(lambda s: _spectral_point(s, N, M))


class Tally:
    def __init__(self):
        self.failures = []

    def eq(self, a, b, what):
        if a != b:
            self.failures.append(what)

    def small(self, r, what):
        if not r < TOL:
            self.failures.append(f"{what} residual {mpmath.nstr(r, 5)}")

    def within(self, start, limit, what):
        took = time.perf_counter() - start
        if took >= limit:
            self.failures.append(f"{what} took {took:.1f}s (limit {limit}s)")
        return took


def finish(number, text, tally):
    ok = not tally.failures
    record_acceptance(number, ok, text if ok else f"{text}: {'; '.join(tally.failures[:3])}")
    assert ok, tally.failures


def test_criterion_01_six_vertex_counts():
    t = Tally()
    start = time.perf_counter()
    t.eq([sv.configuration_count(n) for n in range(1, 5)], [1, 2, 7, 42], "counts")
    t.within(start, 1, "enumeration")
    finish(1, "six-vertex DWBC configuration counts 1, 2, 7, 42", t)


def test_criterion_02_closed_forms_agree():
    t = Tally()
    smp = Sampler(2)
    start = time.perf_counter()
    for N in range(2, 6):
        for _ in range(POINTS):
            pt = spectral(smp, N)
            iz = sv.dwpf(N, pt, "izergin").value
            t.eq(sv.dwpf(N, pt, "lascoux").value, iz, f"lascoux N={N}")
            t.eq(sv.dwpf(N, pt, "lascoux_schur").value, iz, f"lascoux-schur N={N}")
            t.eq(sv.dwpf(N, pt, "kirillov_smirnov").value, iz, f"kirillov-smirnov N={N}")
    t.within(start, 30, "closed forms")
    finish(2, "Izergin = Lascoux = Lascoux-Schur = Kirillov-Smirnov, N=2..5, 10 points each", t)


def test_criterion_03_korepin_conditions():
    t = Tally()
    smp = Sampler(3)
    pt1 = spectral(smp, 1)
    t.eq(sv.dwpf(1, pt1, "bruteforce").value, (1 - pt1.q) / (2 * pt1.p), "initial condition")
    for N in range(1, 5):
        for _ in range(3):
            pt = spectral(smp, N)
            t.eq(sv.korepin_symmetric(N, pt), True, f"symmetry N={N}")
            lhs, rhs = sv.korepin_recursion_sides(N, pt)
            t.eq(lhs, rhs, f"recursion N={N}")
            probes = []
            while len(probes) < N + 2:
                a = smp.rational()
                if all(a * a != b * b for b in probes):
                    probes.append(a)
            t.eq(sv.korepin_degree_ok(N, pt, probes), True, f"degree N={N}")
    finish(3, "brute-force Z meets symmetry, recursion, initial value and degree bound for N<=4", t)


def test_criterion_04_monodromy_route():
    t = Tally()
    smp = Sampler(4)
    for N in range(1, 5):
        for _ in range(3):
            pt = spectral(smp, N)
            t.eq(sv.dwpf(N, pt, "monodromy").value, sv.dwpf(N, pt, "bruteforce").value, f"N={N}")
    finish(4, "monodromy-operator route equals vertex enumeration for N<=4", t)


def test_criterion_05_slavnov_forms():
    t = Tally()
    smp = Sampler(5)
    start = time.perf_counter()
    for N, M in ((1, 2), (2, 3), (3, 3), (2, 4)):
        for _ in range(POINTS):
            pt = spectral(smp, N, M)
            d = sv.slavnov(N, M, pt, "determinant")
            t.eq(sv.slavnov(N, M, pt, "symmetric"), d, f"symmetric {N},{M}")
            t.eq(sv.slavnov(N, M, pt, "schur"), d, f"schur {N},{M}")
    t.within(start, 60, "slavnov")
    finish(5, "Slavnov determinant = symmetric form = Schur sum at 10 points per size", t)


def test_criterion_06_phase_model():
    t = Tally()
    smp = Sampler(6)
    start = time.perf_counter()
    for N, M in itertools.product(range(1, 4), repeat=2):
        for _ in range(3):
            u, v = _phase_uv(smp, N, N)
            d = pm.scalar_product(N, M, u, v, "determinant")
            t.eq(pm.scalar_product(N, M, u, v, "bruteforce"), d, f"bruteforce {N},{M}")
            t.eq(pm.scalar_product(N, M, u, v, "schur"), d, f"schur {N},{M}")
            p = smp.generic(lambda s: (lambda p: (pm.qenum_specialization(N, M, p), p))(s.rational()))[0]
            t.eq(p[0], p[1], f"q-enumeration {N},{M}")
    for box in itertools.product(range(1, 4), repeat=3):
        census = pm.plane_partition_census(*box)
        t.eq(census, pm.macmahon_polynomial(*box), f"census {box}")
        t.eq(sum(census.values()), pm.macmahon_count(*box), f"count {box}")
    t.eq(sum(pm.plane_partition_census(3, 3, 3).values()), 980, "3x3x3 count")
    t.within(start, 60, "phase model")
    finish(6, "phase-model scalar product routes, q-enumeration and plane-partition census (N,M<=3)", t)


def test_criterion_07_correlation_functions():
    t = Tally()
    smp = Sampler(7)
    for N, M in itertools.product(range(1, 4), repeat=2):
        u, v = _phase_uv(smp, N, N - 1)
        for k in range(M + 1):
            a = pm.correlation_first_class(N, M, k, u, v, "skew")
            t.eq(pm.correlation_first_class(N, M, k, u, v, "bruteforce"), a, f"first class {N},{M},{k}")
            t.eq(pm.correlation_first_class(N, M, k, u, v, "determinant"), a, f"first class det {N},{M},{k}")
        for p in range(1, N + 1):
            u2, v2 = _phase_uv(smp, N - p, N)
            a = pm.correlation_second_class(N, M, p, u2, v2, "skew")
            t.eq(pm.correlation_second_class(N, M, p, u2, v2, "bruteforce"), a, f"second class {N},{M},{p}")
            t.eq(pm.correlation_second_class(N, M, p, u2, v2, "determinant"), a, f"second class det {N},{M},{p}")
    finish(7, "first- and second-class correlations agree across three routes for N,M<=3", t)


def test_criterion_08_two_toda():
    t = Tally()
    smp = Sampler(8)
    start = time.perf_counter()
    for L in range(2, 6):
        for _ in range(POINTS):
            f = _toda_family(smp, L)
            s, s2 = smp.rng.randint(1, L - 1), smp.rng.randint(1, L)
            lhs, rhs = td.bilinear_residues(f, s, s2, smp.rationals(L - 1), smp.rationals(L - 1))
            t.eq(lhs, rhs, f"bilinear n-m={L} s={s} s'={s2}")
        f = _toda_family(smp, L)
        for s in range(1, L):
            lhs, rhs = td.toda_molecule_residual(f, s)
            t.eq(lhs, rhs, f"molecule n-m={L} s={s}")
    for L in range(1, 5):
        f = _toda_family(smp, L)
        for s in range(L + 1):
            t.eq(td.tau_polynomial(f, s), td.tau_family(f, s), f"double Schur n-m={L} s={s}")
    t.within(start, 60, "2-Toda")
    finish(8, "2-Toda bilinear identity, molecule equation and double-Schur expansion", t)


def test_criterion_09_kp_hirota():
    t = Tally()
    smp = Sampler(9)
    for N in (3, 4):
        pt = spectral(smp, N)
        coeffs = sv.schur_coeffs(N, pt)
        for _ in range(POINTS):
            tau = td.character_tau_jet(coeffs, smp.rationals(N * (N - 1)))
            t.eq(td.kp_hirota_value(tau), 0, f"KP N={N}")
    finish(9, "KP Hirota equation on the Lascoux tau-function, N=3,4, 10 time points", t)


def test_criterion_10_fermion():
    t = Tally()
    smp = Sampler(10)
    for N in (3, 4):
        pt = spectral(smp, N)
        mc = fm.MasterCoefficients("dwpf", sv.kappa_matrix(N, pt))
        gp = fm.generator_product(mc, N - 1, N)
        rec = sv.upsilon(N, pt) * mc(Partition(())) * fm.bosonize(gp, miwa_times(pt.u[:N], N * (N - 1)))
        t.eq(rec, sv.dwpf(N, pt, "lascoux").value, f"Lascoux N={N}")
    for N, M in ((2, 3), (3, 3)):
        pt = spectral(smp, N, M)
        mc = fm.MasterCoefficients("slavnov", sv.rho_matrix(N, M, pt))
        gp = fm.generator_product(mc, M - 1, N)
        rec = sv.slavnov_upsilon_prime(N, M, pt) * mc(Partition(())) * fm.bosonize(gp, miwa_times(pt.u[:N], N * (M - 1)))
        t.eq(rec, sv.slavnov(N, M, pt, "symmetric"), f"Slavnov M={M} N={N}")
    pt = spectral(smp, 3)
    mc = fm.MasterCoefficients("dwpf", sv.kappa_matrix(3, pt))
    c = mc.normalized
    bilinear = c((1,)) * c((2, 1, 1)) - c((2,)) * c((1, 1, 1))
    gp = fm.generator_product(mc, 2, 3)
    t.eq(gp.terms.get(HookCoordinates(((1, -3), (0, -1)))), bilinear, "N=3 generator coefficient")
    t.eq(bilinear, c((2, 2, 1)), "N=3 Pluecker collapse")
    finish(10, "bosonization reproduces Lascoux and Slavnov forms; N=3 Pluecker example holds", t)


def test_criterion_11_felderhof():
    t = Tally()
    smp = Sampler(11)
    for N in range(1, 5):
        for _ in range(3):
            pt = smp.generic(lambda s: _colour_point(s, N))
            prod = fh.dwpf_reduced(N, pt, "product")
            t.eq(fh.dwpf_reduced(N, pt, "bruteforce"), prod, f"bruteforce N={N}")
            t.eq(fh.dwpf_reduced(N, pt, "determinant"), prod, f"determinant N={N}")
            lhs, rhs = fh.recursion_sides(N, pt.alpha, pt.beta[1:])
            t.eq(lhs, rhs, f"recursion N={N}")
    for s in range(1, 5):
        al, be = smp.rational(), smp.rational()
        a, b = fh.molecule_sides(s, al, be)
        t.eq(a, b, f"molecule s={s}")
        a, b = fh.molecule_hirota_sides(s, al, be)
        t.eq(a, b, f"molecule (Hirota form) s={s}")
    finish(11, "Felderhof reduced routes agree for N<=4, recursion and bi-Wronskian molecule hold", t)


def test_criterion_12_heights():
    t = Tally()
    rng = Sampler(12).rng
    for N in range(1, 5):
        p = hm.sample_params("bsos", N, rng)
        t.small(hm.relative_residual(hm.bsos_dwpf(N, p, "bruteforce"), hm.bsos_dwpf(N, p, "permutation_sum")), f"BSOS N={N}")
        t.small(hm.relative_residual(*hm.bsos_recursion_sides(p)), f"BSOS recursion N={N}")
        q = hm.sample_params("ps_trig", N, rng, r=1, s=1)
        t.small(hm.relative_residual(hm.ps_trig_dwpf(N, q, "bruteforce"), hm.ps_trig_dwpf(N, q, "product")), f"PS trig N={N}")
        e = hm.sample_params("ps_elliptic", N, rng)
        t.small(hm.relative_residual(hm.ps_elliptic_dwpf(N, e, "bruteforce"), hm.ps_elliptic_dwpf(N, e, "product")), f"PS elliptic N={N}")
        if N >= 2:
            t.small(hm.elliptic_identity_residual(N, e), f"elliptic identity N={N}")
    e = hm.sample_params("ps_elliptic", 2, rng)
    lhs, rhs = hm.elliptic_identity_sides(e)
    u, v, x, y = hm.simple_substitution(e)
    a, b = hm.simple_identity_sides(x, y, u, v, e.theta)
    t.small(hm.relative_residual(a, b), "four-theta identity")
    t.small(hm.relative_residual(a, lhs), "N=2 reduction, left")
    t.small(hm.relative_residual(b, rhs), "N=2 reduction, right")
    finish(12, "BSOS, Perk-Schultz and elliptic identity checks below 1e-30 at 50 digits", t)


def test_criterion_13_verify_all():
    t = Tally()
    cmd = [sys.executable, "-m", "taulab", "verify", "--suite", "all", "--seed", "2024",
           "--out", "json", "--no-timing"]
    outs = []
    for jobs in ("4", "1"):
        start = time.perf_counter()
        proc = subprocess.run(cmd + ["--jobs", jobs], capture_output=True, text=True)
        took = t.within(start, 600, f"verify all (jobs={jobs})")
        t.eq(proc.returncode, 0, f"exit status (jobs={jobs})")
        outs.append(proc.stdout)
        print(f"verify --suite all with {jobs} worker(s): {took:.1f}s")
    t.eq(outs[0], outs[1], "byte-identical reports")
    rep = json.loads(outs[0])
    t.eq([c["status"] for c in rep["checks"] if c["status"] != "pass"], [], "all checks pass")
    finish(13, "verify --suite all passes, finishes within 10 minutes and is byte-reproducible", t)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
