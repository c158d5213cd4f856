"""Symmetric-polynomial families evaluated at exact points.

Values may be rationals or any ring elements supporting ``+ - *`` (jets work).
Negative-index basis polynomials are 0, so Jacobi-Trudi matrices need no guards.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence, Tuple

from .exact_core import det_exact
from .partitions import Partition, conjugate, ssyt_weights


@dataclass(frozen=True)
class VariableSet:
    values: Tuple
    t: object = None

    def __init__(self, values: Sequence, t=None):
        object.__setattr__(self, "values", tuple(values))
        object.__setattr__(self, "t", t)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class TimeVector:
    """Times ``x_1..x_K``; ``x[k]`` is 1-based and zero past ``K``."""

    x: Tuple

    def __init__(self, x: Sequence):
        if isinstance(x, TimeVector):
            x = x.x
        object.__setattr__(self, "x", tuple(x))

    def __len__(self):
        return len(self.x)

    def __iter__(self):
        return iter(self.x)

    def __getitem__(self, k: int):
        return self.x[k - 1] if 1 <= k <= len(self.x) else 0

    def scaled(self, factors: Sequence) -> "TimeVector":
        return TimeVector([a * f for a, f in zip(self.x, factors)])

    def __neg__(self):
        return TimeVector([-a for a in self.x])


def _vals(u):
    if isinstance(u, VariableSet):
        return u.values
    return tuple(u)


def _zero_like(u):
    return Fraction(0)


# ----------------------------------------------------------------- bases


def elementary(r: int, u) -> object:
    u = _vals(u)
    if r < 0 or r > len(u):
        return Fraction(0)
    e = [Fraction(1)] + [Fraction(0)] * r
    for x in u:
        for k in range(r, 0, -1):
            e[k] = e[k] + x * e[k - 1]
    return e[r]


def elementary_all(u, r_max: int):
    u = _vals(u)
    e = [Fraction(1)] + [Fraction(0)] * r_max
    for x in u:
        for k in range(r_max, 0, -1):
            e[k] = e[k] + x * e[k - 1]
    return e


def complete_all(u, r_max: int):
    """[h_0, ..., h_{r_max}]."""
    u = _vals(u)
    h = [Fraction(1)] + [Fraction(0)] * r_max
    for x in u:
        for k in range(1, r_max + 1):
            h[k] = h[k] + x * h[k - 1]
    return h


def complete(r: int, u) -> object:
    if r < 0:
        return Fraction(0)
    return complete_all(u, r)[r]


def powersum(r: int, u) -> object:
    u = _vals(u)
    if r < 0:
        return Fraction(0)
    if r == 0:
        return Fraction(len(u))
    acc = Fraction(0)
    for x in u:
        acc = acc + x ** r
    return acc


def character_all(x: TimeVector, r_max: int):
    """[zeta_0, ..., zeta_{r_max}] from r zeta_r = sum_k k x_k zeta_{r-k}."""
    if not isinstance(x, TimeVector):
        x = TimeVector(x)
    z = [Fraction(1)]
    for r in range(1, r_max + 1):
        acc = Fraction(0)
        for k in range(1, min(r, len(x)) + 1):
            xk = x[k]
            if isinstance(xk, (int, Fraction)) and xk == 0:
                continue
            acc = acc + xk * z[r - k] * k
        z.append(acc * Fraction(1, r))
    return z


def character(r: int, x: TimeVector) -> object:
    if r < 0:
        return Fraction(0)
    return character_all(x, r)[r]


def t_complete_all(u, t, r_max: int):
    """q_r(u;t) from Q(z) = prod (1 - t u z)/(1 - u z): q_r = sum_k (-t)^k e_k h_{r-k}."""
    h = complete_all(u, r_max)
    e = elementary_all(u, r_max)
    out = []
    for r in range(r_max + 1):
        acc = Fraction(0)
        tk = Fraction(1)
        for k in range(r + 1):
            if k:
                tk = tk * (-t)
            acc = acc + tk * e[k] * h[r - k]
        out.append(acc)
    return out


def t_complete(r: int, u, t) -> object:
    if r < 0:
        return Fraction(0)
    return t_complete_all(u, t, r)[r]


def basis_eval(kind: str, r: int, vars) -> object:
    if r < 0:
        return Fraction(0)
    if kind == "elementary":
        return elementary(r, vars)
    if kind == "complete":
        return complete(r, vars)
    if kind == "powersum":
        return powersum(r, vars)
    if kind == "character":
        return character(r, vars)
    if kind == "t_complete":
        if not isinstance(vars, VariableSet) or vars.t is None:
            raise ValueError("t_complete needs a VariableSet carrying t")
        return t_complete(r, vars.values, vars.t)
    raise ValueError(f"unknown basis kind {kind!r}")


def miwa_times(vars, K: int) -> TimeVector:
    if K < 1:
        raise ValueError("K must be positive")
    return TimeVector([powersum(k, vars) * Fraction(1, k) for k in range(1, K + 1)])


# ---------------------------------------------------------- determinants


def _jt_det(lam: Partition, seq, size: int | None = None):
    n = len(lam) if size is None else size
    if n == 0:
        return Fraction(1)

    def g(r):
        return seq[r] if 0 <= r < len(seq) else Fraction(0)

    return det_exact([[g(lam[i] + j - i) for j in range(n)] for i in range(n)])


def schur_eval(lam: Partition, vars, method: str = "jacobi_trudi"):
    u = _vals(vars)
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if len(lam) > len(u):
        return Fraction(0)
    if method == "jacobi_trudi":
        top = lam[0] + len(lam)
        return _jt_det(lam, complete_all(u, top))
    if method == "dual_jacobi_trudi":
        lc = conjugate(lam)
        top = lc[0] + len(lc)
        return _jt_det(lc, elementary_all(u, top))
    if method == "bialternant":
        n = len(u)
        if len(set(u)) != n:
            raise ValueError("bialternant needs pairwise-distinct variables")
        num = det_exact([[u[j] ** (n - 1 - i + lam[i]) for j in range(n)] for i in range(n)])
        den = Fraction(1)
        for i in range(n):
            for j in range(i + 1, n):
                den *= u[i] - u[j]
        return num / den
    if method == "tableau":
        total = Fraction(0)
        for w in ssyt_weights(lam, len(u)):
            term = Fraction(1)
            for x, k in zip(u, w):
                if k:
                    term = term * x ** k
            total = total + term
        return total
    raise ValueError(f"unknown Schur method {method!r}")


def skew_schur_eval(lam: Partition, mu: Partition, vars):
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    if not lam.contains(mu):
        return Fraction(0)
    n = len(lam)
    if n == 0:
        return Fraction(1)
    h = complete_all(vars, lam[0] + n)

    def g(r):
        return h[r] if 0 <= r < len(h) else Fraction(0)

    return det_exact([[g(lam[i] - mu[j] - i + j) for j in range(n)] for i in range(n)])


def character_poly(lam: Partition, x: TimeVector):
    """chi_lam(x) = det[zeta_{lam_i + j - i}(x)]."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if len(lam) == 0:
        return Fraction(1)
    return _jt_det(lam, character_all(x, lam[0] + len(lam)))


def tschur_eval(lam: Partition, vars, t=None):
    if t is None:
        t = vars.t
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if len(lam) == 0:
        return Fraction(1)
    return _jt_det(lam, t_complete_all(_vals(vars), t, lam[0] + len(lam)))


# ----------------------------------------------------------- Hall-Littlewood


def _multiplicities(lam: Partition, n: int):
    parts = lam.padded(n)
    m = {}
    for p in parts:
        m[p] = m.get(p, 0) + 1
    return m


def hl_v(lam: Partition, n: int, t):
    """v_lam(t) = prod_{j>=0} prod_{k<=m_j} (1-t^k)/(1-t), with m_0 = n - len(lam)."""
    out = Fraction(1)
    for mult in _multiplicities(lam, n).values():
        for k in range(1, mult + 1):
            out *= (1 - t ** k) / (1 - t)
    return out


def hl_b(lam: Partition, t):
    """b_lam(t) = prod_{i>=1} prod_{k<=m_i} (1-t^k)."""
    out = Fraction(1)
    mult = {}
    for p in lam.parts:
        mult[p] = mult.get(p, 0) + 1
    for m in mult.values():
        for k in range(1, m + 1):
            out *= 1 - t ** k
    return out


def hall_littlewood_eval(lam: Partition, vars, t=None, normalization: str = "P"):
    if t is None:
        t = vars.t
    t = Fraction(t)
    u = _vals(vars)
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    n = len(u)
    if t == 1:
        raise ValueError("t = 1 is excluded")
    if len(set(u)) != n:
        raise ValueError("Hall-Littlewood symmetrisation needs distinct variables")
    if len(lam) > n:
        return Fraction(0)
    parts = lam.padded(n)
    total = Fraction(0)
    for sigma in permutations(range(n)):
        term = Fraction(1)
        for i in range(n):
            if parts[i]:
                term *= u[sigma[i]] ** parts[i]
        for i in range(n):
            for j in range(i + 1, n):
                a, b = u[sigma[i]], u[sigma[j]]
                term *= (a - t * b) / (a - b)
        total += term
    p = total / hl_v(lam, n, t)
    if normalization == "P":
        return p
    if normalization == "Q":
        return hl_b(lam, t) * p
    raise ValueError("normalization must be 'P' or 'Q'")
