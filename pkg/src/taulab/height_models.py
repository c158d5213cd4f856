"""Elliptic theta kernel and the BSOS / Perk-Schultz domain-wall partition functions.

All values are mpmath numbers at a working precision carried by :class:`ThetaParams`
(or passed explicitly for the trigonometric model).  Each partition function is
computed by lattice enumeration and by a closed form.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field, replace
from itertools import permutations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import mpmath
from mpmath import mp

MIN_DPS = 40
DEFAULT_DPS = 50


class DegenerateWeight(ValueError):
    """A weight denominator vanishes (or nearly vanishes) at the sampled point."""


# ------------------------------------------------------------------- theta

@dataclass(frozen=True)
class ThetaParams:
    nome: object
    dps: int = DEFAULT_DPS
    terms: int = 0
    K1: object = field(default=None, compare=False)
    K2: object = field(default=None, compare=False)

    def __post_init__(self):
        if self.dps < MIN_DPS:
            raise ValueError(f"precision must be at least {MIN_DPS} digits")
        with mpmath.workdps(self.dps + 10):
            q = mpmath.mpf(self.nome)
            if not 0 < q < 1:
                raise ValueError("nome must lie in (0, 1)")
            need = int(math.ceil((self.dps + 10) * math.log(10) / (-2 * float(mpmath.log(q))))) + 1
            T = max(self.terms, need)
            prod = mpmath.mpf(1)
            for n in range(1, T + 1):
                prod *= ((1 + q ** (2 * n - 1)) / (1 - q ** (2 * n - 1)) * (1 - q ** (2 * n)) / (1 + q ** (2 * n))) ** 2
            K1 = mpmath.pi / 2 * prod
            K2 = -K1 * mpmath.log(q) / mpmath.pi
        object.__setattr__(self, "nome", q)
        object.__setattr__(self, "terms", T)
        object.__setattr__(self, "K1", K1)
        object.__setattr__(self, "K2", K2)


THETA_KINDS = ("H", "H1", "Theta", "Theta1")


def theta_eval(kind: str, u, params: ThetaParams):
    """Truncated-product theta functions with nome q and half period K1."""
    if kind not in THETA_KINDS:
        raise ValueError(f"unknown theta kind {kind!r}")
    with mpmath.workdps(params.dps + 10):
        q, K1 = params.nome, params.K1
        u = mpmath.mpmathify(u)
        c = mpmath.cos(mpmath.pi * u / K1)
        out = mpmath.mpf(1)
        sgn = -1 if kind in ("H", "Theta") else 1
        for n in range(1, params.terms + 1):
            if kind in ("H", "H1"):
                out *= (1 + sgn * 2 * q ** (2 * n) * c + q ** (4 * n)) * (1 - q ** (2 * n))
            else:
                out *= (1 + sgn * 2 * q ** (2 * n - 1) * c + q ** (4 * n - 2)) * (1 - q ** (2 * n))
        if kind == "H":
            out *= 2 * q ** mpmath.mpf(0.25) * mpmath.sin(mpmath.pi * u / (2 * K1))
        elif kind == "H1":
            out *= 2 * q ** mpmath.mpf(0.25) * mpmath.cos(mpmath.pi * u / (2 * K1))
        return out


def theta_reference(kind: str, u, params: ThetaParams):
    """Same functions through mpmath's Jacobi theta series (an independent route)."""
    with mpmath.workdps(params.dps + 10):
        z = mpmath.pi * mpmath.mpmathify(u) / (2 * params.K1)
        idx = {"H": 1, "H1": 2, "Theta": 4, "Theta1": 3}[kind]
        return mpmath.jtheta(idx, z, params.nome)


def relative_residual(a, b):
    scale = max(abs(a), abs(b))
    if scale == 0:
        return mpmath.mpf(0)
    return abs(a - b) / scale


def scaled_residual(a, b, scale):
    """|a - b| against max(|a|, |b|, scale); usable near zeros of a and b."""
    den = max(abs(a), abs(b), abs(scale))
    if den == 0:
        return mpmath.mpf(0)
    return abs(a - b) / den


# ------------------------------------------------------------ parameters

@dataclass(frozen=True)
class ModelParams:
    """Point in parameter space.  ``a0`` is the pairing (a_(0))_{1,L}, omega offset included."""

    u: Tuple
    v: Tuple
    theta: Optional[ThetaParams] = None
    lam: object = None
    zeta: object = None
    a0: object = None
    eta: object = None
    r: int = 0
    s: int = 0
    dps: int = DEFAULT_DPS

    @property
    def N(self) -> int:
        return len(self.u)

    def with_rapidities(self, u, v) -> "ModelParams":
        return replace(self, u=tuple(u), v=tuple(v))


def _bracket_bsos(p: ModelParams) -> Callable:
    def br(x):
        y = p.lam * x
        return theta_eval("H", y, p.theta) * theta_eval("Theta", y, p.theta)
    return br


def _bracket_ps(p: ModelParams) -> Callable:
    def br(x):
        return theta_eval("H", p.lam * x, p.theta)
    return br


# ------------------------------------------------------------------ BSOS

def _bsos_weight(br, zeta, a, b, d, c, x):
    """W(a b; d c | x): a top-left, b top-right, d bottom-left, c bottom-right."""
    if b == d:
        s = b - a
        if c == a + 2 * s:
            return br(x + 1) / br(1)
        if c == a:
            return br(zeta + a - s * x) / br(zeta + a)
        return 0
    if c == a:
        s = b - a
        return br(x) / br(1) * br(zeta + a + s) / br(zeta + a)
    return 0


def _rows_between(prev: Sequence[int], left: int, right: int):
    """Height rows r with r[0]=left, r[-1]=right, |r[j]-r[j-1]| = |r[j]-prev[j]| = 1."""
    n = len(prev)

    def rec(row):
        j = len(row)
        if j == n:
            yield tuple(row)
            return
        if j == n - 1:
            cands = [right]
        else:
            cands = [row[-1] - 1, row[-1] + 1]
        for h in cands:
            if abs(h - row[-1]) == 1 and abs(h - prev[j]) == 1:
                row.append(h)
                yield from rec(row)
                row.pop()

    if abs(left - prev[0]) != 1:
        return
    yield from rec([left])


def _bsos_bruteforce(p: ModelParams, base: int):
    N = p.N
    br = _bracket_bsos(p)
    layer = {tuple(base + j for j in range(N + 1)): mpmath.mpf(1)}
    for i in range(1, N + 1):
        nxt: Dict[Tuple[int, ...], object] = {}
        x = [p.u[i - 1] - p.v[j] for j in range(N)]
        for row, w in layer.items():
            for new in _rows_between(row, base + i, base + N - i):
                t = w
                for j in range(1, N + 1):
                    t *= _bsos_weight(br, p.zeta, row[j - 1], row[j], new[j - 1], new[j], x[j - 1])
                    if t == 0:
                        break
                if t != 0:
                    nxt[new] = nxt.get(new, 0) + t
        layer = nxt
    return layer.get(tuple(base + N - j for j in range(N + 1)), mpmath.mpf(0))


def _f1(br, x, y):
    return br(x - y + 1) / br(x - y)


def _bsos_permutation_sum(p: ModelParams, base: int):
    N = p.N
    br = _bracket_bsos(p)
    u, v, zeta = p.u, p.v, p.zeta

    def WA(x):
        return br(x + 1) / br(1)

    def WB(x):
        return br(x) / br(1)

    def WC(l, x):
        return br(zeta + l - x) / br(zeta + l)

    total = mpmath.mpf(0)
    for sig in permutations(range(N)):
        t = mpmath.mpf(1)
        for i in range(N):
            for j in range(i + 1, N):
                t *= WB(u[sig[i]] - v[j]) * _f1(br, u[sig[i]], u[sig[j]]) * WA(u[sig[j]] - v[i])
        for k in range(N):
            t *= WC(base + N - 1 - k, u[sig[k]] - v[k])
        total += t
    return total


BSOS_MAX_N = 5


def bsos_check_point(p: ModelParams, tol=mpmath.mpf("1e-6")) -> None:
    br = _bracket_bsos(p)
    with mpmath.workdps(p.dps + 10):
        scale = abs(br(mpmath.mpf("0.5")))
        dens = [br(1)] + [br(p.zeta + l) for l in range(-1, p.N + 2)]
        for i in range(p.N):
            for j in range(p.N):
                if i != j:
                    dens.append(br(p.u[i] - p.u[j]))
        if any(abs(d) < tol * scale for d in dens):
            raise DegenerateWeight("BSOS weight denominator near zero")


def bsos_dwpf(N: int, params: ModelParams, method: str = "permutation_sum", base: int = 0):
    if params.N != N or len(params.v) != N:
        raise ValueError("rapidity vectors must have length N")
    if N > BSOS_MAX_N:
        raise ValueError(f"BSOS routes limited to N <= {BSOS_MAX_N}")
    bsos_check_point(params)
    with mpmath.workdps(params.dps + 10):
        if method == "bruteforce":
            out = _bsos_bruteforce(params, base)
        elif method == "permutation_sum":
            out = _bsos_permutation_sum(params, base)
        else:
            raise ValueError(f"unknown method {method!r}")
        return +out


def bsos_recursion_sides(params: ModelParams):
    """Z^(0)_N by enumeration against the single sum over r with Z^(1)_{N-1} by enumeration."""
    N = params.N
    br = _bracket_bsos(params)
    u, v, zeta = params.u, params.v, params.zeta
    with mpmath.workdps(params.dps + 10):
        lhs = _bsos_bruteforce(params, 0)
        rhs = mpmath.mpf(0)
        for r in range(N):
            t = br(zeta - (u[r] - v[N - 1])) / br(zeta)
            for j in range(N):
                if j != r:
                    t *= br(u[j] - v[N - 1]) / br(1) * _f1(br, u[j], u[r])
            for j in range(N - 1):
                t *= br(u[r] - v[j] + 1) / br(1)
            if N > 1:
                sub = params.with_rapidities(u[:r] + u[r + 1:], v[:N - 1])
                t *= _bsos_bruteforce(sub, 1)
            rhs += t
        return +lhs, +rhs


# --------------------------------------------------------- PS trigonometric

def ps_trig_weight(top: int, right: int, left: int, bottom: int, x, eta, s: int):
    """X^{top,right}_{left,bottom}(x); colours 1..s+1 are odd-grade, the rest even."""
    minus = lambda c: c <= s + 1  # noqa: E731
    sh = mpmath.sinh(eta)
    if top == right == left == bottom:
        return mpmath.sinh(eta * (1 - x)) / sh if minus(top) else mpmath.sinh(eta * (1 + x)) / sh
    if top == bottom and left == right:
        w = mpmath.sinh(eta * x) / sh
        return -w if minus(top) == minus(left) else w
    if top == left and right == bottom:
        return mpmath.exp(eta * x) if top < right else mpmath.exp(-eta * x)
    return 0


class ColourConservationError(AssertionError):
    pass


def _ps_trig_bruteforce(p: ModelParams):
    N = p.N
    L = p.r + p.s + 2
    colours = range(1, L + 1)
    total = mpmath.mpf(0)
    used = set()
    # state: colours on vertical bonds under the current row
    layer = {(1,) * N: (mpmath.mpf(1), frozenset({1}))}
    for i in range(N):
        nxt: Dict[Tuple[int, ...], Tuple[object, frozenset]] = {}

        def rec(j, carry, below, w, seen):
            if j == N:
                if carry != L:
                    return
                key = tuple(below)
                old = nxt.get(key)
                nxt[key] = (w if old is None else old[0] + w, seen if old is None else old[1] | seen)
                return
            top = above[j]
            x = p.u[i] - p.v[j]
            for right in colours:
                for bottom in colours:
                    wt = ps_trig_weight(top, right, carry, bottom, x, p.eta, p.s)
                    if wt == 0:
                        continue
                    below.append(bottom)
                    rec(j + 1, right, below, w * wt, seen | {right, bottom})
                    below.pop()

        for above, (w, seen) in layer.items():
            rec(0, 1, [], w, seen)
        layer = nxt
    final = layer.get((L,) * N)
    for key, (w, seen) in layer.items():
        used |= seen
    if not used <= {1, L}:
        raise ColourConservationError(f"colours {sorted(used)} appeared in a configuration")
    if final is not None:
        total = final[0]
    return total


def _ps_trig_product(p: ModelParams):
    N, eta = p.N, p.eta
    sh = mpmath.sinh(eta)
    out = mpmath.mpf(1)
    for k in range(N):
        out *= mpmath.exp(eta * (p.u[k] - p.v[k]))
    for i in range(N):
        for j in range(i + 1, N):
            out *= mpmath.sinh(eta * (1 - p.u[i] + p.u[j])) / sh
            out *= mpmath.sinh(eta * (1 + p.v[i] - p.v[j])) / sh
    return out


PS_MAX_N = 5


def ps_trig_dwpf(N: int, params: ModelParams, method: str = "product"):
    if params.N != N or len(params.v) != N:
        raise ValueError("rapidity vectors must have length N")
    if N > PS_MAX_N:
        raise ValueError(f"limited to N <= {PS_MAX_N}")
    with mpmath.workdps(params.dps + 10):
        if method == "bruteforce":
            out = _ps_trig_bruteforce(params)
        elif method == "product":
            out = _ps_trig_product(params)
        else:
            raise ValueError(f"unknown method {method!r}")
        return +out


def _X(p, t, r, l, b, x):
    return ps_trig_weight(t, r, l, b, x, p.eta, p.s)


def ps_trig_line_permutation_sides(params: ModelParams):
    """Z(u) against prod_j X^{11}_{11}(u1-uj)/X^{LL}_{LL}(u1-uj) Z(u_2..u_N, u_1)."""
    p, N, L = params, params.N, params.r + params.s + 2
    with mpmath.workdps(p.dps + 10):
        lhs = _ps_trig_bruteforce(p)
        f = mpmath.mpf(1)
        for j in range(1, N):
            x = p.u[0] - p.u[j]
            f *= _X(p, 1, 1, 1, 1, x) / _X(p, L, L, L, L, x)
        rhs = f * _ps_trig_bruteforce(p.with_rapidities(p.u[1:] + p.u[:1], p.v))
        return +lhs, +rhs


def ps_trig_recursion_sides(params: ModelParams, which: str = "top"):
    """Freeze u_1 = v_1 + 1 (``top``) or u_N = v_1 (``bottom``) and compare with the frozen product."""
    p, N, L = params, params.N, params.r + params.s + 2
    with mpmath.workdps(p.dps + 10):
        u, v = list(p.u), list(p.v)
        if which == "top":
            u[0] = v[0] + 1
            q = p.with_rapidities(u, v)
            rhs = _X(q, 1, L, 1, L, mpmath.mpf(1))
            for k in range(1, N):
                rhs *= _X(q, 1, L, L, 1, u[0] - v[k]) * _X(q, L, 1, 1, L, u[k] - v[0])
            sub = q.with_rapidities(u[1:], v[1:])
        elif which == "bottom":
            u[N - 1] = v[0]
            q = p.with_rapidities(u, v)
            rhs = _X(q, 1, L, 1, L, mpmath.mpf(0))
            for k in range(N - 1):
                rhs *= _X(q, 1, 1, 1, 1, u[k] - v[0])
            for k in range(1, N):
                rhs *= _X(q, L, L, L, L, u[N - 1] - v[k])
            sub = q.with_rapidities(u[:N - 1], v[1:])
        else:
            raise ValueError("which must be 'top' or 'bottom'")
        lhs = _ps_trig_bruteforce(q)
        if N > 1:
            rhs *= _ps_trig_bruteforce(sub)
        return +lhs, +rhs


# ------------------------------------------------------------ PS elliptic

def _ps_ell_weight(br, h, kind: str, x):
    if kind == "A+":
        return br(1 + x) / br(1)
    if kind == "A-":
        return br(1 - x) / br(1)
    if kind == "B+":
        return br(x) * br(h + 1) / (br(1) * br(h))
    if kind == "B-":
        return br(x) * br(h - 1) / (br(1) * br(h))
    if kind == "C+":
        return br(h - x) / br(h)
    if kind == "C-":
        return br(h + x) / br(h)
    raise ValueError(kind)


def _ps_face_kind(ma, mb, mc, md) -> Optional[str]:
    """Face type from e_1-counts at corners a (top-left), b (top-right), c (bottom-left), d."""
    x, y = mb - ma, mc - ma
    if md - mb not in (0, 1) or md - mc not in (0, 1):
        return None
    if x == y == 1:
        return "A+" if md - ma == 2 else "C+"
    if x == y == 0:
        return "A-" if md == ma else "C-"
    return "B+" if x == 1 else "B-"


def _ps_elliptic_bruteforce(p: ModelParams, a0):
    """Corner (i, j) carries a_(0) + m e_1 + (i + j - m) e_L; only m is stored."""
    N = p.N
    br = _bracket_ps(p)
    layer = {tuple(range(N + 1)): mpmath.mpf(1)}
    for i in range(1, N + 1):
        nxt: Dict[Tuple[int, ...], object] = {}
        for row, w in layer.items():
            def rec(new, t):
                j = len(new)
                if j == N + 1:
                    key = tuple(new)
                    nxt[key] = nxt.get(key, 0) + t
                    return
                cands = [N] if j == N else [new[-1], new[-1] + 1]
                for m in cands:
                    if m - row[j] not in (0, 1) or m - new[-1] not in (0, 1):
                        continue
                    kind = _ps_face_kind(row[j - 1], row[j], new[-1], m)
                    if kind is None:
                        continue
                    h = a0 + (i - 1) + (j - 1)
                    wt = _ps_ell_weight(br, h, kind, p.u[i - 1] - p.v[j - 1])
                    if wt == 0:
                        continue
                    new.append(m)
                    rec(new, t * wt)
                    new.pop()
            rec([i], w)
        layer = nxt
    return layer.get((N,) * (N + 1), mpmath.mpf(0))


def _ps_elliptic_product(p: ModelParams, a0):
    N = p.N
    br = _bracket_ps(p)
    tot = sum(p.u[k] - p.v[k] for k in range(N))
    out = br(a0 + (N - 1) - tot) / br(a0 + (N - 1))
    for i in range(N):
        for j in range(i + 1, N):
            out *= br(1 + p.u[i] - p.u[j]) / br(1) * br(1 - (p.v[i] - p.v[j])) / br(1)
    return out


def ps_elliptic_check_point(p: ModelParams, tol=mpmath.mpf("1e-6")) -> None:
    br = _bracket_ps(p)
    with mpmath.workdps(p.dps + 10):
        scale = abs(br(mpmath.mpf("0.5")))
        dens = [br(1)] + [br(p.a0 + k) for k in range(0, 2 * p.N)]
        if any(abs(d) < tol * scale for d in dens):
            raise DegenerateWeight("PS height weight denominator near zero")


def ps_elliptic_dwpf(N: int, params: ModelParams, method: str = "product"):
    if params.N != N or len(params.v) != N:
        raise ValueError("rapidity vectors must have length N")
    if N > PS_MAX_N:
        raise ValueError(f"limited to N <= {PS_MAX_N}")
    ps_elliptic_check_point(params)
    with mpmath.workdps(params.dps + 10):
        if method == "bruteforce":
            out = _ps_elliptic_bruteforce(params, params.a0)
        elif method == "product":
            out = _ps_elliptic_product(params, params.a0)
        else:
            raise ValueError(f"unknown method {method!r}")
        return +out


def ps_elliptic_quasi_periodicity(params: ModelParams, method: str = "product"):
    """Pairs (shifted Z, predicted factor times Z) for u_1 -> u_1 + 2K_1/lam and u_1 -> u_1 + 2iK_2/lam."""
    p, N = params, params.N
    th = p.theta
    with mpmath.workdps(p.dps + 10):
        z = ps_elliptic_dwpf(N, p, method)
        u1 = p.u[0]
        shift_a = p.with_rapidities((u1 + 2 * th.K1 / p.lam,) + tuple(p.u[1:]), p.v)
        shift_b = p.with_rapidities((u1 + 2j * th.K2 / p.lam,) + tuple(p.u[1:]), p.v)
        za = ps_elliptic_dwpf(N, shift_a, method)
        zb = ps_elliptic_dwpf(N, shift_b, method)
        fa = (-1) ** N
        fb = (-1 / th.nome) ** N * mpmath.exp(
            -1j * mpmath.pi * p.lam / th.K1 * (N * u1 - sum(p.v) - p.a0))
        return [(za, fa * z), (zb, fb * z)]


def _ps_ell_recursion_sides(params: ModelParams):
    """Freeze u_1 = v_1 - 1 and compare with the frozen first row and column times Z_{N-1}."""
    p, N = params, params.N
    br = _bracket_ps(p)
    with mpmath.workdps(p.dps + 10):
        u, v = list(p.u), list(p.v)
        u[0] = v[0] - 1
        q = p.with_rapidities(u, v)
        lhs = _ps_elliptic_bruteforce(q, p.a0)
        rhs = _ps_ell_weight(br, p.a0, "C+", mpmath.mpf(-1))
        for k in range(1, N):
            h = p.a0 + k
            rhs *= _ps_ell_weight(br, h, "B-", u[k] - v[0]) * _ps_ell_weight(br, h, "B+", u[0] - v[k])
        if N > 1:
            rhs *= _ps_elliptic_bruteforce(q.with_rapidities(u[1:], v[1:]), p.a0 + 2)
        return +lhs, +rhs


ps_elliptic_recursion_sides = _ps_ell_recursion_sides


# ---------------------------------------------------------- identities

def simple_identity_sides(x, y, u, v, params: ThetaParams):
    """H(x-y)H(x+y)H(u+v)H(u-v) against the two-term right side."""
    H = lambda t: theta_eval("H", t, params)  # noqa: E731
    with mpmath.workdps(params.dps + 10):
        lhs = H(x - y) * H(x + y) * H(u + v) * H(u - v)
        rhs = H(u + x) * H(u - x) * H(v + y) * H(v - y) - H(u + y) * H(u - y) * H(v + x) * H(v - x)
        return +lhs, +rhs


def elliptic_identity_sides(params: ModelParams):
    p, N = params, params.N
    br = _bracket_ps(p)
    u, v, A = p.u, p.v, p.a0
    with mpmath.workdps(p.dps + 10):
        lhs = br(A + (N - 1) - sum(u[j] - v[j] for j in range(N))) * br(A + 2 * (N - 1))
        for j in range(N - 1):
            lhs *= br(1 - (v[j] - v[N - 1]))
        for i in range(N):
            for j in range(i + 1, N):
                lhs *= br(u[i] - u[j])
        rhs = mpmath.mpf(0)
        for k in range(N):
            t = (-1) ** (N - 1 - k) * br(A + 2 * (N - 1) - (u[k] - v[N - 1]))
            for j in range(N):
                if j != k:
                    t *= br(u[j] - v[N - 1])
            for j in range(N - 1):
                t *= br(1 + u[k] - v[j])
            t *= br(A + (N - 1) - sum(u[j] for j in range(N) if j != k) + sum(v[:N - 1]))
            for i in range(N):
                for j in range(i + 1, N):
                    if k not in (i, j):
                        t *= br(u[i] - u[j])
            rhs += t
        return +lhs, +rhs


def elliptic_identity_residual(N: int, params: ModelParams):
    if N < 2 or params.N != N:
        raise ValueError("need N >= 2 rapidities")
    lhs, rhs = elliptic_identity_sides(params)
    with mpmath.workdps(params.dps + 10):
        return +relative_residual(lhs, rhs)


def simple_substitution(params: ModelParams):
    """(u, v, x, y) of the four-theta identity that reproduces the N = 2 identity, scaled by lam."""
    if params.N != 2:
        raise ValueError("substitution is for N = 2")
    A, (u1, u2), (v1, v2), lam = params.a0, params.u, params.v, params.lam
    with mpmath.workdps(params.dps + 10):
        half = mpmath.mpf(1) / 2
        su = half * A + 1 + half * u1 - half * u2
        sv = half * A + 1 - half * u1 + half * u2
        sx = -half * A - 1 + half * u1 + half * u2 - v2
        sy = -half * A + half * u1 + half * u2 - v1
        return lam * su, lam * sv, lam * sx, lam * sy


# ------------------------------------------------------------- sampling

def sample_params(kind: str, N: int, rng: random.Random, dps: int = DEFAULT_DPS,
                  r: int = 0, s: int = 0, max_tries: int = 1000) -> ModelParams:
    """Seeded real parameters, resampled when a weight denominator is near zero."""
    def real(lo, hi):
        # draw on a decimal grid so the point is exactly reproducible
        return mpmath.mpf(rng.randint(int(lo * 1000), int(hi * 1000))) / 1000

    with mpmath.workdps(dps + 10):
        for _ in range(max_tries):
            u = tuple(real(-1, 1) for _ in range(N))
            v = tuple(real(-1, 1) for _ in range(N))
            if kind == "ps_trig":
                return ModelParams(u=u, v=v, eta=real(0.1, 0.9), r=r, s=s, dps=dps)
            theta = ThetaParams(real(0.05, 0.35), dps=dps)
            lam = real(0.15, 0.6)
            try:
                if kind == "bsos":
                    p = ModelParams(u=u, v=v, theta=theta, lam=lam, zeta=real(0.2, 2.5), dps=dps)
                    bsos_check_point(p)
                elif kind == "ps_elliptic":
                    p = ModelParams(u=u, v=v, theta=theta, lam=lam, a0=real(0.2, 2.5), dps=dps)
                    ps_elliptic_check_point(p)
                else:
                    raise ValueError(f"unknown model kind {kind!r}")
            except DegenerateWeight:
                continue
            return p
    raise DegenerateWeight("could not sample a generic point")
