"""Registry of verification checks, grouped into suites.

Each check is a pure function of a :class:`Sampler` (seeded per check) and a
trial count.  It yields :class:`Sample` pairs; the runner decides pass/fail.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import mpmath

from . import felderhof as fh
from . import fermion as fm
from . import height_models as hm
from . import phase_model as pm
from . import six_vertex as sv
from . import sympoly as sp
from . import toda as td
from .exact_core import ExactMatrix
from .partitions import Partition, partitions_in_box

SUITES = ("toda", "sympoly", "fermion", "phase", "sixvertex", "felderhof", "heights")
DEFAULT_TOLERANCE = mpmath.mpf("1e-30")
RESAMPLE_CAP = 1000
MASK64 = (1 << 64) - 1

DEGENERATE = (
    ZeroDivisionError,
    sv.DegenerateSpectralPoint,
    pm.DegeneratePoint,
    fh.DegenerateColourPoint,
    hm.DegenerateWeight,
)


# ------------------------------------------------------------------ seeding

def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def fnv1a64(text: str) -> int:
    h = 0xCBF29CE484222325
    for b in text.encode("utf-8"):
        h = ((h ^ b) * 0x100000001B3) & MASK64
    return h


def derive_seed(seed: int, name: str) -> int:
    """Per-check seed: splitmix64(seed xor fnv1a64(name))."""
    return splitmix64((seed & MASK64) ^ fnv1a64(name))


class ResampleLimit(RuntimeError):
    pass


class Sampler:
    """Seeded source of rational and real test points."""

    def __init__(self, seed: int):
        self.seed = seed & MASK64
        self.rng = random.Random(self.seed)

    def rational(self) -> Fraction:
        num = 0
        while num == 0:
            num = self.rng.randint(-50, 50)
        return Fraction(num, self.rng.randint(1, 20))

    def rationals(self, n: int) -> List[Fraction]:
        return [self.rational() for _ in range(n)]

    def generic(self, build: Callable[["Sampler"], object]):
        """Call ``build`` until it returns without hitting a degenerate point."""
        for _ in range(RESAMPLE_CAP):
            try:
                return build(self)
            except DEGENERATE:
                continue
        raise ResampleLimit(f"no generic point after {RESAMPLE_CAP} draws")


@dataclass
class Sample:
    lhs: object
    rhs: object
    info: Dict[str, object] = field(default_factory=dict)
    residual: object = None  # overrides the relative residual of real checks


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    fn: Callable[[Sampler, int], Iterable[Sample]]
    kind: str = "exact"  # or "real"
    params: Tuple[Tuple[str, object], ...] = ()


REGISTRY: Dict[str, Check] = {}


def register(suite: str, name: str, kind: str = "exact", **params):
    def deco(fn):
        full = f"{suite}.{name}"
        if full in REGISTRY:
            raise ValueError(f"duplicate check {full}")
        REGISTRY[full] = Check(suite, full, fn, kind, tuple(sorted(params.items())))
        return fn
    return deco


def checks_for(suite: str) -> List[Check]:
    if suite == "all":
        names = sorted(REGISTRY)
    elif suite in SUITES:
        names = sorted(n for n, c in REGISTRY.items() if c.suite == suite)
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return [REGISTRY[n] for n in names]


# ------------------------------------------------------------------ runner

@dataclass
class CheckResult:
    name: str
    params: Dict[str, object]
    status: str
    lhs: object
    rhs: object
    residual: object
    elapsed: float
    kind: str
    message: str = ""


def _residual(check: Check, s: Sample):
    if check.kind == "exact":
        if s.lhs == s.rhs:
            return Fraction(0)
        try:
            return s.lhs - s.rhs
        except TypeError:
            return Fraction(1)
    if s.residual is not None:
        return s.residual
    with mpmath.workdps(60):
        return hm.relative_residual(mpmath.mpmathify(s.lhs), mpmath.mpmathify(s.rhs))


def run_check(name: str, seed: int, trials: int, tolerance=None) -> CheckResult:
    check = REGISTRY[name]
    tol = DEFAULT_TOLERANCE if tolerance is None else mpmath.mpf(tolerance)
    sampler = Sampler(derive_seed(seed, name))
    params = dict(check.params)
    params["trials"] = trials
    params["seed"] = sampler.seed
    if check.kind == "real":
        params["tolerance"] = mpmath.nstr(tol, 5)
    start = time.perf_counter()
    last: Optional[Sample] = None
    status, message, res = "pass", "", None
    try:
        count = 0
        for s in check.fn(sampler, trials):
            count += 1
            last = s
            res = _residual(check, s)
            ok = (s.lhs == s.rhs) if check.kind == "exact" else (res < tol)
            if not ok:
                status = "fail"
                break
        if count == 0:
            status, message = "skipped", "no samples"
    except ResampleLimit as exc:
        status, message = "skipped", str(exc)
    except Exception as exc:  # a crashing check is a failing check
        status, message = "fail", f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if last is not None:
        params.update(last.info)
    return CheckResult(name, params, status, None if last is None else last.lhs,
                       None if last is None else last.rhs, res, elapsed, check.kind, message)


# ============================================================ sympoly

@register("sympoly", "schur_routes_agree", nvars=3, box="3x3")
def _schur_routes(smp, trials):
    for _ in range(trials):
        u = smp.rationals(3)
        for lam in partitions_in_box(3, 3):
            vals = [sp.schur_eval(lam, u, m) for m in ("jacobi_trudi", "bialternant", "tableau", "dual_jacobi_trudi")]
            if len(set(vals)) != 1:
                yield Sample(vals[0], vals[1:], {"lambda": str(lam)})
                return
        yield Sample(vals[0], vals[-1])


@register("sympoly", "schur_from_miwa_times", nvars=3, box="3x3")
def _schur_miwa(smp, trials):
    for _ in range(trials):
        u = smp.rationals(3)
        x = sp.miwa_times(u, 9)
        for lam in partitions_in_box(3, 3):
            yield Sample(sp.character_poly(lam, x), sp.schur_eval(lam, u), {"lambda": str(lam)})


@register("sympoly", "hall_littlewood_t0_is_schur", nvars=3, box="3x3")
def _hl_t0(smp, trials):
    for _ in range(trials):
        u = smp.rationals(3)
        for lam in partitions_in_box(3, 3):
            yield Sample(sp.hall_littlewood_eval(lam, u, 0), sp.schur_eval(lam, u), {"lambda": str(lam)})


@register("sympoly", "t_deformed_tau_product", nvars=3, degree=4)
def _t_tau(smp, trials):
    for _ in range(trials):
        u, v, t = smp.rationals(3), smp.rationals(3), smp.rational()
        yield Sample(td.t_deformed_tau_series(u, v, t, 4), td.hall_littlewood_product_series(u, v, t, 4))


# ============================================================ toda

def _toda_family(smp: Sampler, L: int) -> td.TodaFamily:
    def build(s):
        A = ExactMatrix.from_rows([s.rationals(L) for _ in range(L)])
        f = td.TodaFamily(0, L, A, sp.TimeVector(s.rationals(L - 1)), sp.TimeVector(s.rationals(L - 1)))
        if any(td.tau_family(f, k) == 0 for k in range(L + 1)):
            raise ZeroDivisionError("vanishing tau")
        return f
    return smp.generic(build)


for _L in range(2, 6):
    @register("toda", f"bilinear_identity.n{_L}", size=_L)
    def _bilinear(smp, trials, L=_L):
        for _ in range(trials):
            f = _toda_family(smp, L)
            s = smp.rng.randint(1, L - 1)
            s2 = smp.rng.randint(1, L)
            x2, y2 = smp.rationals(L - 1), smp.rationals(L - 1)
            lhs, rhs = td.bilinear_residues(f, s, s2, x2, y2)
            yield Sample(lhs, rhs, {"s": s, "s_prime": s2})

for _L in range(2, 6):
    @register("toda", f"molecule_equation.n{_L}", size=_L)
    def _molecule(smp, trials, L=_L):
        for _ in range(trials):
            f = _toda_family(smp, L)
            for s in range(1, L):
                lhs, rhs = td.toda_molecule_residual(f, s)
                yield Sample(lhs, rhs, {"s": s})

for _L in range(1, 5):
    @register("toda", f"double_schur_expansion.n{_L}", size=_L)
    def _double_schur(smp, trials, L=_L):
        for _ in range(trials):
            f = _toda_family(smp, L)
            for s in range(L + 1):
                yield Sample(td.tau_polynomial(f, s), td.tau_family(f, s), {"s": s})


@register("toda", "dressing_relation", sizes="3..5")
def _dressing(smp, trials):
    for _ in range(trials):
        for L in (3, 4, 5):
            f = _toda_family(smp, L)
            W, W0 = td.hatted_wave_matrices(f)
            yield Sample(W0.to_rows(), (W @ td.dressed_matrix(f)).to_rows(), {"size": L})


@register("toda", "wave_generating_functions", size=3)
def _wave(smp, trials):
    for _ in range(trials):
        f = _toda_family(smp, 3)
        for which in td.WAVE_KINDS:
            for s in (1, 2):
                lam = smp.rational()
                lhs, rhs = td.generating_function_sides(f, which, s, lam)
                yield Sample(lhs, rhs, {"wave": which, "s": s})


@register("toda", "desnanot_jacobi", size=5)
def _jacobi(smp, trials):
    for _ in range(trials):
        M = ExactMatrix.from_rows([smp.rationals(5) for _ in range(5)])
        lhs, rhs = td.jacobi_identity_sides(M)
        yield Sample(lhs, rhs)


for _N in (3, 4):
    @register("toda", f"kp_hirota_lascoux.N{_N}", N=_N)
    def _kp(smp, trials, N=_N):
        for _ in range(trials):
            pt = smp.generic(lambda s: _spectral_point(s, N))
            coeffs = sv.schur_coeffs(N, pt)
            times = smp.rationals(N * (N - 1))
            tau = td.character_tau_jet(coeffs, times)
            yield Sample(td.kp_hirota_value(tau), Fraction(0))


# ============================================================ six-vertex

def _spectral_point(smp: Sampler, N: int, M: int = 0) -> sv.SpectralPoint:
    pt = sv.SpectralPoint(smp.rationals(N), smp.rationals(N), smp.rational(), smp.rationals(M))
    if not pt.is_generic():
        raise sv.DegenerateSpectralPoint("non-generic")
    if M and len(set(pt.W)) != M:
        raise sv.DegenerateSpectralPoint("repeated inhomogeneity")
    return pt


@register("sixvertex", "configuration_counts", sizes="1..4")
def _counts(smp, trials):
    for N, expected in zip(range(1, 5), (1, 2, 7, 42)):
        yield Sample(sv.configuration_count(N), expected, {"N": N})


for _N in range(2, 6):
    @register("sixvertex", f"closed_forms_agree.N{_N}", N=_N)
    def _closed(smp, trials, N=_N):
        for _ in range(trials):
            pt = smp.generic(lambda s: _spectral_point(s, N))
            iz = sv.dwpf(N, pt, "izergin").value
            for m in ("lascoux", "lascoux_schur", "kirillov_smirnov"):
                yield Sample(sv.dwpf(N, pt, m).value, iz, {"method": m})
            for k, form in sv.KS_FORMS.items():
                yield Sample(form(N, pt), iz, {"method": k})

for _N in range(1, 5):
    @register("sixvertex", f"monodromy_equals_enumeration.N{_N}", N=_N)
    def _mono(smp, trials, N=_N):
        for _ in range(trials):
            pt = smp.generic(lambda s: _spectral_point(s, N))
            yield Sample(sv.dwpf(N, pt, "monodromy").value, sv.dwpf(N, pt, "bruteforce").value)

    @register("sixvertex", f"enumeration_bridge.N{_N}", N=_N)
    def _bridge(smp, trials, N=_N):
        for _ in range(trials):
            pt = smp.generic(lambda s: _spectral_point(s, N))
            yield Sample(sv.dwpf(N, pt, "bruteforce").value,
                         sv.dwpf(N, pt, "izergin").value * sv.normalization_bridge(N, pt))

    @register("sixvertex", f"korepin_symmetry.N{_N}", N=_N)
    def _k_sym(smp, trials, N=_N):
        for _ in range(trials):
            pt = smp.generic(lambda s: _spectral_point(s, N))
            yield Sample(sv.korepin_symmetric(N, pt), True)

    @register("sixvertex", f"korepin_recursion.N{_N}", N=_N)
    def _k_rec(smp, trials, N=_N):
        for _ in range(trials):
            pt = smp.generic(lambda s: _spectral_point(s, N))
            lhs, rhs = sv.korepin_recursion_sides(N, pt)
            yield Sample(lhs, rhs)

    @register("sixvertex", f"korepin_degree.N{_N}", N=_N)
    def _k_deg(smp, trials, N=_N):
        for _ in range(trials):
            pt = smp.generic(lambda s: _spectral_point(s, N))
            probes: List[Fraction] = []
            while len(probes) < N + 2:
                a = smp.rational()
                if all(a * a != b * b for b in probes):
                    probes.append(a)
            yield Sample(sv.korepin_degree_ok(N, pt, probes), True)


@register("sixvertex", "korepin_initial_condition", N=1)
def _k_init(smp, trials):
    for _ in range(trials):
        pt = smp.generic(lambda s: _spectral_point(s, 1))
        yield Sample(sv.dwpf(1, pt, "bruteforce").value, (1 - pt.q) / (2 * pt.p))


for _N, _M in ((1, 2), (2, 3), (3, 3), (2, 4)):
    @register("sixvertex", f"slavnov_forms_agree.N{_N}_M{_M}", N=_N, M=_M)
    def _slavnov(smp, trials, N=_N, M=_M):
        for _ in range(trials):
            pt = smp.generic(lambda s: _spectral_point(s, N, M))
            d = sv.slavnov(N, M, pt, "determinant")
            yield Sample(sv.slavnov(N, M, pt, "symmetric"), d, {"method": "symmetric"})
            yield Sample(sv.slavnov(N, M, pt, "schur"), d, {"method": "schur"})


# ============================================================ fermion

@register("fermion", "wick_matches_normal_ordering", max_factors=6)
def _wick(smp, trials):
    for _ in range(trials * 20):
        n = smp.rng.choice([2, 4, 6])
        fs = [(smp.rng.choice([fm.PSI, fm.PSI_STAR]), smp.rng.randint(-2, 1)) for _ in range(n)]
        yield Sample(fm.wick_expectation(fs), fm.normal_order_expectation(fs), {"factors": str(fs)})


for _N in (2, 3, 4):
    @register("fermion", f"bosonization_lascoux.N{_N}", N=_N)
    def _boson(smp, trials, N=_N):
        for _ in range(trials):
            pt = smp.generic(lambda s: _spectral_point(s, N))
            mc = fm.MasterCoefficients("dwpf", sv.kappa_matrix(N, pt))
            if mc(Partition(())) == 0:
                continue
            gp = fm.generator_product(mc, N - 1, N)
            yield Sample(len(fm.plucker_collapse_mismatches(mc, gp)), 0, {"part": "collapse"})
            rec = sv.upsilon(N, pt) * mc(Partition(())) * fm.bosonize(gp, sp.miwa_times(pt.u[:N], N * (N - 1)))
            yield Sample(rec, sv.dwpf(N, pt, "lascoux").value, {"part": "reconstruction"})

for _N, _M in ((2, 3), (3, 3), (2, 4)):
    @register("fermion", f"bosonization_slavnov.N{_N}_M{_M}", N=_N, M=_M)
    def _boson_sl(smp, trials, N=_N, M=_M):
        for _ in range(trials):
            pt = smp.generic(lambda s: _spectral_point(s, N, M))
            mc = fm.MasterCoefficients("slavnov", sv.rho_matrix(N, M, pt))
            if mc(Partition(())) == 0:
                continue
            gp = fm.generator_product(mc, M - 1, N)
            yield Sample(len(fm.plucker_collapse_mismatches(mc, gp)), 0, {"part": "collapse"})
            rec = (sv.slavnov_upsilon_prime(N, M, pt) * mc(Partition(()))
                   * fm.bosonize(gp, sp.miwa_times(pt.u[:N], N * (M - 1))))
            yield Sample(rec, sv.slavnov(N, M, pt, "symmetric"), {"part": "reconstruction"})


@register("fermion", "plucker_three_example", N=3)
def _pl3(smp, trials):
    target = Partition((2, 2, 1))
    for _ in range(trials):
        pt = smp.generic(lambda s: _spectral_point(s, 3))
        mc = fm.MasterCoefficients("dwpf", sv.kappa_matrix(3, pt))
        if mc(Partition(())) == 0:
            continue
        c = mc.normalized
        bilinear = c((1,)) * c((2, 1, 1)) - c((2,)) * c((1, 1, 1))
        gp = fm.generator_product(mc, 2, 3)
        coeff = next(v for k, v in gp.terms.items() if fm.partition_from_hooks(k) == target)
        yield Sample(coeff, bilinear, {"part": "generator coefficient"})
        yield Sample(bilinear, c(target), {"part": "collapse"})


@register("fermion", "plucker_relations", sizes="2..4")
def _plucker(smp, trials):
    for _ in range(trials):
        for N in (2, 3, 4):
            rows = [smp.rationals(N) for _ in range(2 * N)]
            mc = fm.MasterCoefficients("random", rows)
            mus = [smp.rng.randint(0, 2 * N - 1) for _ in range(N - 1)]
            nus = [smp.rng.randint(0, 2 * N - 1) for _ in range(N + 1)]
            yield Sample(fm.plucker_residual(mc, mus, nus), Fraction(0), {"N": N, "mus": mus, "nus": nus})


@register("fermion", "cauchy_via_wick", sizes="1..3")
def _cauchy_wick(smp, trials):
    for _ in range(trials):
        for p in (1, 2, 3):
            for dual in (False, True):
                def build(s):
                    k, l = s.rationals(p), s.rationals(p)
                    if len(set(k + l)) != 2 * p:
                        raise ZeroDivisionError("coincident points")
                    return k, l
                k, l = smp.generic(build)
                a, b = fm.cauchy_wick_sides(k, l, p + 3, dual)
                yield Sample(a, b, {"p": p, "dual": dual})


# ============================================================ phase model

def _phase_uv(smp: Sampler, n_u: int, n_v: int):
    def build(s):
        u, v = s.rationals(n_u), s.rationals(n_v)
        sq = [a * a for a in u + v]
        if len(set(sq)) != len(sq):
            raise pm.DegeneratePoint("coincident squares")
        return u, v
    return smp.generic(build)


for _N, _M in itertools.product(range(1, 4), range(1, 4)):
    @register("phase", f"scalar_product_routes.N{_N}_M{_M}", N=_N, M=_M)
    def _sp(smp, trials, N=_N, M=_M):
        for _ in range(trials):
            u, v = _phase_uv(smp, N, N)
            d = pm.scalar_product(N, M, u, v, "determinant")
            yield Sample(pm.scalar_product(N, M, u, v, "bruteforce"), d, {"method": "bruteforce"})
            yield Sample(pm.scalar_product(N, M, u, v, "schur"), d, {"method": "schur"})

    @register("phase", f"q_enumeration.N{_N}_M{_M}", N=_N, M=_M)
    def _qe(smp, trials, N=_N, M=_M):
        for _ in range(trials):
            def build(s):
                p = s.rational()
                return p, pm.qenum_specialization(N, M, p)
            p, (lhs, rhs) = smp.generic(build)
            yield Sample(lhs, rhs, {"p": str(p)})

    @register("phase", f"first_class_correlations.N{_N}_M{_M}", N=_N, M=_M)
    def _fc(smp, trials, N=_N, M=_M):
        for _ in range(trials):
            u, v = _phase_uv(smp, N, N - 1)
            for k in range(M + 1):
                a = pm.correlation_first_class(N, M, k, u, v, "skew")
                yield Sample(pm.correlation_first_class(N, M, k, u, v, "bruteforce"), a, {"k": k, "method": "bruteforce"})
                yield Sample(pm.correlation_first_class(N, M, k, u, v, "determinant"), a, {"k": k, "method": "determinant"})

    @register("phase", f"second_class_correlations.N{_N}_M{_M}", N=_N, M=_M)
    def _sc(smp, trials, N=_N, M=_M):
        for _ in range(trials):
            for p in range(1, N + 1):
                u, v = _phase_uv(smp, N - p, N)
                a = pm.correlation_second_class(N, M, p, u, v, "skew")
                yield Sample(pm.correlation_second_class(N, M, p, u, v, "bruteforce"), a, {"p": p, "method": "bruteforce"})
                yield Sample(pm.correlation_second_class(N, M, p, u, v, "determinant"), a, {"p": p, "method": "determinant"})

    @register("phase", f"schur_state_coefficients.N{_N}_M{_M}", N=_N, M=_M)
    def _ssc(smp, trials, N=_N, M=_M):
        for _ in range(trials):
            u, _v = _phase_uv(smp, N, 0)
            for occ, (a, b) in pm.schur_state_coefficients(N, M, u).items():
                yield Sample(a, b, {"occupation": str(occ)})


@register("phase", "plane_partition_census", boxes="all r,s,t <= 3")
def _census(smp, trials):
    for r, s, t in itertools.product(range(1, 4), repeat=3):
        census = pm.plane_partition_census(r, s, t)
        yield Sample(census, pm.macmahon_polynomial(r, s, t), {"box": f"{r}x{s}x{t}"})
        yield Sample(sum(census.values()), pm.macmahon_count(r, s, t), {"box": f"{r}x{s}x{t}"})


# ============================================================ Felderhof

def _colour_point(smp: Sampler, N: int) -> fh.ColourPoint:
    pt = fh.ColourPoint(smp.rationals(N), smp.rationals(N))
    if not pt.is_generic():
        raise fh.DegenerateColourPoint("non-generic")
    return pt


for _N in range(1, 5):
    @register("felderhof", f"reduced_routes_agree.N{_N}", N=_N)
    def _fh_routes(smp, trials, N=_N):
        for _ in range(trials):
            pt = smp.generic(lambda s: _colour_point(s, N))
            prod = fh.dwpf_reduced(N, pt, "product")
            yield Sample(fh.dwpf_reduced(N, pt, "bruteforce"), prod, {"method": "bruteforce"})
            yield Sample(fh.dwpf_reduced(N, pt, "determinant"), prod, {"method": "determinant"})

    @register("felderhof", f"recursion.N{_N}", N=_N)
    def _fh_rec(smp, trials, N=_N):
        for _ in range(trials):
            def build(s):
                pt = _colour_point(s, N)
                return fh.recursion_sides(N, pt.alpha, pt.beta[1:])
            lhs, rhs = smp.generic(build)
            yield Sample(lhs, rhs)

    @register("felderhof", f"homogeneous_limit_factor.N{_N}", N=_N)
    def _fh_hom(smp, trials, N=_N):
        for _ in range(trials):
            def build(s):
                al, be = s.rational(), s.rational()
                return fh.homogeneous_discrepancy(N, al, be)
            yield Sample(smp.generic(build), Fraction(1))


@register("felderhof", "row_column_parity", sizes="1..5")
def _fh_par(smp, trials):
    for N in range(1, 6):
        yield Sample(fh.c_count_parities(N), True, {"N": N})


@register("felderhof", "free_fermion_condition")
def _fh_ff(smp, trials):
    for _ in range(trials):
        lhs, rhs = smp.generic(lambda s: fh.free_fermion_sides(s.rational(), s.rational(), s.rational()))
        yield Sample(lhs, rhs)


@register("felderhof", "cauchy_identity", sizes="1..4")
def _fh_cauchy(smp, trials):
    for _ in range(trials):
        for N in range(1, 5):
            lhs, rhs = smp.generic(lambda s: fh.cauchy_sides(_colour_point(s, N)))
            yield Sample(lhs, rhs, {"N": N})


for _S in range(1, 5):
    @register("felderhof", f"bi_wronskian_molecule.s{_S}", s=_S)
    def _fh_mol(smp, trials, S=_S):
        for _ in range(trials):
            def build(s):
                al, be = s.rational(), s.rational()
                return fh.molecule_sides(S, al, be), fh.molecule_hirota_sides(S, al, be), \
                    fh.jacobi_identity_sides(fh.derivative_values(S + 1, al, be))
            (a, b), (c, d), (e, f) = smp.generic(build)
            yield Sample(a, b, {"form": "determinant"})
            yield Sample(c, d, {"form": "hirota"})
            yield Sample(e, f, {"form": "jacobi"})


# ============================================================ heights

def _height_point(smp: Sampler, kind: str, N: int, **kw) -> hm.ModelParams:
    return hm.sample_params(kind, N, smp.rng, **kw)


@register("heights", "theta_product_vs_series", kind="real")
def _theta_series(smp, trials):
    for _ in range(trials):
        p = _height_point(smp, "ps_elliptic", 1)
        th = p.theta
        with mpmath.workdps(th.dps + 10):
            for u in (p.u[0] * th.K1, p.u[0] * th.K1 + 1j * p.v[0] * th.K2):
                for k in hm.THETA_KINDS:
                    a, b = hm.theta_eval(k, u, th), hm.theta_reference(k, u, th)
                    scale = abs(hm.theta_eval(k, th.K1 if k in ("H", "Theta") else 0, th))
                    yield Sample(a, b, {"kind": k, "nome": str(th.nome)}, hm.scaled_residual(a, b, scale))


@register("heights", "theta_quasi_periodicity", kind="real")
def _theta_qp(smp, trials):
    for _ in range(trials):
        p = _height_point(smp, "ps_elliptic", 1)
        th = p.theta
        H = lambda z: hm.theta_eval("H", z, th)  # noqa: E731
        T = lambda z: hm.theta_eval("Theta", z, th)  # noqa: E731
        with mpmath.workdps(th.dps + 10):
            u = p.u[0] * th.K1 + 1j * p.v[0] * th.K2 / 2
            yield Sample(H(-u), -H(u), {"relation": "H odd"})
            yield Sample(T(-u), T(u), {"relation": "Theta even"})
            yield Sample(H(u + 2 * th.K1), -H(u), {"relation": "H real period"})
            yield Sample(T(u + 2 * th.K1), T(u), {"relation": "Theta real period"})
            for n in (1, 2, -1):
                f = (-1) ** n * th.nome ** (-n * n) * mpmath.exp(-1j * n * mpmath.pi * u / th.K1)
                yield Sample(H(u + 2j * n * th.K2), f * H(u), {"relation": f"H imaginary shift n={n}"})
            scale = abs(H(th.K1))
            for m, n in ((1, 0), (0, 1), (1, -1), (2, 1)):
                z = 2 * m * th.K1 + 2j * n * th.K2
                yield Sample(H(z), 0, {"relation": f"H zero {m},{n}"}, abs(H(z)) / scale)
                z = 2 * m * th.K1 + 2j * (n + mpmath.mpf(1) / 2) * th.K2
                yield Sample(T(z), 0, {"relation": f"Theta zero {m},{n}"}, abs(T(z)) / scale)


for _N in range(1, 5):
    @register("heights", f"bsos_enumeration_vs_permutation_sum.N{_N}", kind="real", N=_N, dps=hm.DEFAULT_DPS)
    def _bsos(smp, trials, N=_N):
        for _ in range(trials):
            p = _height_point(smp, "bsos", N)
            yield Sample(hm.bsos_dwpf(N, p, "bruteforce"), hm.bsos_dwpf(N, p, "permutation_sum"))

    @register("heights", f"bsos_recursion.N{_N}", kind="real", N=_N, dps=hm.DEFAULT_DPS)
    def _bsos_rec(smp, trials, N=_N):
        for _ in range(trials):
            p = _height_point(smp, "bsos", N)
            lhs, rhs = hm.bsos_recursion_sides(p)
            yield Sample(lhs, rhs)

    @register("heights", f"ps_trig_enumeration_vs_product.N{_N}", kind="real", N=_N, dps=hm.DEFAULT_DPS)
    def _pst(smp, trials, N=_N):
        for t in range(trials):
            r, s = smp.rng.randint(0, 2), smp.rng.randint(0, 2)
            p = _height_point(smp, "ps_trig", N, r=r, s=s)
            yield Sample(hm.ps_trig_dwpf(N, p, "bruteforce"), hm.ps_trig_dwpf(N, p, "product"), {"r": r, "s": s})

    @register("heights", f"ps_trig_korepin_properties.N{_N}", kind="real", N=_N, dps=hm.DEFAULT_DPS)
    def _pst_k(smp, trials, N=_N):
        for t in range(trials):
            r, s = smp.rng.randint(0, 2), smp.rng.randint(0, 2)
            p = _height_point(smp, "ps_trig", N, r=r, s=s)
            for which in ("top", "bottom"):
                lhs, rhs = hm.ps_trig_recursion_sides(p, which)
                yield Sample(lhs, rhs, {"relation": f"recursion {which}", "r": r, "s": s})
            lhs, rhs = hm.ps_trig_line_permutation_sides(p)
            yield Sample(lhs, rhs, {"relation": "line permutation", "r": r, "s": s})

    @register("heights", f"ps_elliptic_enumeration_vs_product.N{_N}", kind="real", N=_N, dps=hm.DEFAULT_DPS)
    def _pse(smp, trials, N=_N):
        for _ in range(trials):
            p = _height_point(smp, "ps_elliptic", N)
            yield Sample(hm.ps_elliptic_dwpf(N, p, "bruteforce"), hm.ps_elliptic_dwpf(N, p, "product"))

    @register("heights", f"ps_elliptic_recursion_and_periodicity.N{_N}", kind="real", N=_N, dps=hm.DEFAULT_DPS)
    def _pse_k(smp, trials, N=_N):
        for _ in range(trials):
            p = _height_point(smp, "ps_elliptic", N)
            lhs, rhs = hm.ps_elliptic_recursion_sides(p)
            yield Sample(lhs, rhs, {"relation": "recursion"})
            for (a, b), name in zip(hm.ps_elliptic_quasi_periodicity(p, "bruteforce"), ("real", "imaginary")):
                yield Sample(a, b, {"relation": f"{name} quasi-period"})

for _N in (2, 3, 4):
    @register("heights", f"elliptic_identity.N{_N}", kind="real", N=_N, dps=hm.DEFAULT_DPS)
    def _ell(smp, trials, N=_N):
        for _ in range(trials):
            p = _height_point(smp, "ps_elliptic", N)
            lhs, rhs = hm.elliptic_identity_sides(p)
            yield Sample(lhs, rhs)


@register("heights", "elliptic_identity_two_term_reduction", kind="real", N=2, dps=hm.DEFAULT_DPS)
def _ell_simple(smp, trials):
    for _ in range(trials):
        p = _height_point(smp, "ps_elliptic", 2)
        lhs, rhs = hm.elliptic_identity_sides(p)
        u, v, x, y = hm.simple_substitution(p)
        a, b = hm.simple_identity_sides(x, y, u, v, p.theta)
        yield Sample(a, b, {"relation": "four-theta identity"})
        yield Sample(a, lhs, {"relation": "left sides match"})
        yield Sample(b, rhs, {"relation": "right sides match"})
