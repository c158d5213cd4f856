"""Trigonometric coloured Felderhof model with every u_i - v_j in 2 pi i Z.

Only reduced quantities are computed: the partition function divided by
``prod_i sqrt(1 - alpha_i^2) prod_j sqrt(1 - beta_j^2)``.  Each row and column of a
domain-wall configuration holds an odd number of c vertices, so what is left
is rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Sequence, Tuple

from .exact_core import Jet, det_exact, hirota_apply


class DegenerateColourPoint(ValueError):
    pass


@dataclass(frozen=True)
class ColourPoint:
    alpha: Tuple[Fraction, ...]
    beta: Tuple[Fraction, ...]

    def __init__(self, alpha: Sequence, beta: Sequence):
        object.__setattr__(self, "alpha", tuple(Fraction(a) for a in alpha))
        object.__setattr__(self, "beta", tuple(Fraction(b) for b in beta))

    def __len__(self):
        return len(self.alpha)

    def violations(self) -> List[str]:
        a, b = self.alpha, self.beta
        out = []
        if len(a) != len(b):
            out.append("alpha and beta differ in length")
        if any(x * x == 1 for x in a + b):
            out.append("colour at +-1")
        if len(set(a)) < len(a) or len(set(b)) < len(b):
            out.append("repeated colour")
        if any(x == y or x * y == 1 for x in a for y in b):
            out.append("alpha_i = beta_j or alpha_i beta_j = 1")
        return out

    def is_generic(self) -> bool:
        return not self.violations()

    def permuted(self, sa: Sequence[int], sb: Sequence[int]) -> "ColourPoint":
        return ColourPoint([self.alpha[i] for i in sa], [self.beta[j] for j in sb])


# weights at u - v in 2 pi i Z; c is kept symbolic (tracked by counts)

def weight_a(al, be):
    return 1 - al * be


def weight_b(al, be):
    return be - al


def free_fermion_sides(al, be, z=1) -> Tuple[Fraction, Fraction]:
    """omega_1 omega_2 + omega_3 omega_4 against omega_5 omega_6 with e^{u-v} = z.

    The product omega_5 omega_6 = z (1 - al^2)(1 - be^2) is rational.
    """
    al, be, z = Fraction(al), Fraction(be), Fraction(z)
    w1, w2 = 1 - al * be * z, z - al * be
    w3, w4 = be - al * z, al - be * z
    return w1 * w2 + w3 * w4, z * (1 - al * al) * (1 - be * be)


# -------------------------------------------------------------- brute force

def _bruteforce(pt: ColourPoint) -> Fraction:
    """Sum over alternating sign matrices.

    At entry (i, j) with value 0 the vertex is a-type when the partial row sum to
    the left equals the partial column sum above; otherwise it is omega_3 (row sum
    1, column sum 0) or omega_4 = -omega_3 (row sum 0, column sum 1).
    """
    al, be = pt.alpha, pt.beta
    N = len(al)
    total = Fraction(0)

    def finish(w, rc, cc):
        for i in range(N):
            w *= (1 - al[i] ** 2) ** ((rc[i] - 1) // 2)
            w *= (1 - be[i] ** 2) ** ((cc[i] - 1) // 2)
        return w

    def rec(i, j, col, h, w, rc, cc):
        nonlocal total
        if w == 0:
            return
        if j == N:
            if h != 1:
                return
            if i + 1 == N:
                if all(col):
                    total += finish(w, rc, cc)
                return
            rec(i + 1, 0, col, 0, w, rc, cc)
            return
        v = col[j]
        for e in (-1, 0, 1):
            nh, nv = h + e, v + e
            if nh not in (0, 1) or nv not in (0, 1):
                continue
            if e == 0:
                if h == v:
                    x = weight_a(al[i], be[j])
                else:
                    x = weight_b(al[i], be[j]) if h == 1 else -weight_b(al[i], be[j])
                rec(i, j + 1, col[:j] + (nv,) + col[j + 1:], nh, w * x, rc, cc)
            else:
                rc2 = rc[:i] + (rc[i] + 1,) + rc[i + 1:]
                cc2 = cc[:j] + (cc[j] + 1,) + cc[j + 1:]
                rec(i, j + 1, col[:j] + (nv,) + col[j + 1:], nh, w, rc2, cc2)

    rec(0, 0, (0,) * N, 0, Fraction(1), (0,) * N, (0,) * N)
    return total


def c_count_parities(N: int) -> bool:
    """True when every ASM of size N has odd nonzero counts in all rows and columns."""
    ok = True

    def rec(i, j, col, h, rc, cc):
        nonlocal ok
        if j == N:
            if h != 1:
                return
            if i + 1 == N:
                if all(col):
                    ok = ok and all(c % 2 for c in rc) and all(c % 2 for c in cc)
                return
            rec(i + 1, 0, col, 0, rc, cc)
            return
        for e in (-1, 0, 1):
            nh, nv = h + e, col[j] + e
            if nh in (0, 1) and nv in (0, 1):
                r2 = rc[:i] + (rc[i] + (e != 0),) + rc[i + 1:]
                c2 = cc[:j] + (cc[j] + (e != 0),) + cc[j + 1:]
                rec(i, j + 1, col[:j] + (nv,) + col[j + 1:], nh, r2, c2)

    rec(0, 0, (0,) * N, 0, (0,) * N, (0,) * N)
    return ok


# ------------------------------------------------------------ closed forms

def phi(al, be):
    return 1 / ((al - be) * (1 - al * be))


def _determinant(pt: ColourPoint) -> Fraction:
    al, be = pt.alpha, pt.beta
    N = len(al)
    num = Fraction(1)
    for x in al:
        for y in be:
            num *= (x - y) * (1 - x * y)
    den = Fraction(1)
    for i in range(N):
        for j in range(i + 1, N):
            den *= (al[i] - al[j]) * (be[j] - be[i])
    return num / den * det_exact([[phi(x, y) for y in be] for x in al])


def _product(pt: ColourPoint) -> Fraction:
    al, be = pt.alpha, pt.beta
    out = Fraction(1)
    for i in range(len(al)):
        for j in range(i + 1, len(al)):
            out *= (1 - al[i] * al[j]) * (1 - be[i] * be[j])
    return out


BRUTEFORCE_MAX_N = 5


def dwpf_reduced(N: int, pt: ColourPoint, method: str = "product") -> Fraction:
    if len(pt.alpha) != N or len(pt.beta) != N:
        raise ValueError("colour point does not have N colours of each kind")
    bad = pt.violations()
    if bad:
        raise DegenerateColourPoint("; ".join(bad))
    if method == "bruteforce":
        if N > BRUTEFORCE_MAX_N:
            raise ValueError(f"bruteforce limited to N <= {BRUTEFORCE_MAX_N}")
        return _bruteforce(pt)
    if method == "determinant":
        return _determinant(pt)
    if method == "product":
        return _product(pt)
    raise ValueError(f"unknown method {method!r}")


def recursion_sides(N: int, alpha: Sequence, beta_rest: Sequence) -> Tuple[Fraction, Fraction]:
    """Brute force at beta_1 = 1/alpha_1 against the frozen first row and column."""
    al = [Fraction(a) for a in alpha]
    br = [Fraction(b) for b in beta_rest]
    if len(al) != N or len(br) != N - 1:
        raise ValueError("need N alphas and N-1 further betas")
    be = [1 / al[0]] + br
    # alpha_1 beta_1 = 1 is outside the generic set, so call the enumerator directly
    lhs = _bruteforce(ColourPoint(al, be))
    rhs = Fraction((-1) ** (N - 1))
    for j in range(1, N):
        rhs *= weight_b(al[0], be[j]) * weight_b(al[j], be[0])
    if N > 1:
        rhs *= _bruteforce(ColourPoint(al[1:], be[1:]))
    return lhs, rhs


def cauchy_sides(pt: ColourPoint) -> Tuple[Fraction, Fraction]:
    """det[phi] prod (a_i - b_j)(1 - a_i b_j) against its factored form."""
    al, be = pt.alpha, pt.beta
    N = len(al)
    lhs = det_exact([[phi(x, y) for y in be] for x in al])
    for x in al:
        for y in be:
            lhs *= (x - y) * (1 - x * y)
    rhs = Fraction(1)
    for i in range(N):
        for j in range(i + 1, N):
            rhs *= (1 - al[i] * al[j]) * (1 - be[i] * be[j]) * (al[i] - al[j]) * (be[j] - be[i])
    return lhs, rhs


# -------------------------------------------------------- homogeneous limit

def _phi_jet(al, be, order: int) -> Jet:
    names, orders = ("alpha", "beta"), (order, order)
    a = Jet.variable("alpha", al, names, orders)
    b = Jet.variable("beta", be, names, orders)
    return 1 / ((a - b) * (1 - a * b))


def _diff(j: Jet, da: int, db: int, orders: Tuple[int, int]) -> Jet:
    out: Dict[Tuple[int, int], Fraction] = {}
    for (p, q), c in j.coeffs.items():
        if p >= da and q >= db:
            pp, qq = p - da, q - db
            out[(pp, qq)] = c * (factorial(p) // factorial(pp)) * (factorial(q) // factorial(qq))
    return Jet(j.variables, orders, out)


def derivative_matrix(s: int, al, be, jet_order: int = 0) -> List[List[Jet]]:
    """[d_alpha^{i-1} d_beta^{j-1} phi]_{s x s} as jets of the given order."""
    al, be = Fraction(al), Fraction(be)
    if al == be or al * be == 1:
        raise DegenerateColourPoint("alpha = beta or alpha beta = 1")
    base = _phi_jet(al, be, jet_order + max(s - 1, 0))
    orders = (jet_order, jet_order)
    return [[_diff(base, i, j, orders) for j in range(s)] for i in range(s)]


def homogeneous_tau(s: int, al, be, jet_order: int = 2) -> Jet:
    """Bi-Wronskian tau_s of phi(alpha, beta) as a jet; tau_0 = 1."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    al, be = Fraction(al), Fraction(be)
    if al == be or al * be == 1:
        raise DegenerateColourPoint("alpha = beta or alpha beta = 1")
    if s == 0:
        return Jet.constant(1, ("alpha", "beta"), (jet_order, jet_order))
    return det_exact(derivative_matrix(s, al, be, jet_order))


def homogeneous_dwpf_reduced(N: int, al, be) -> Fraction:
    """The homogeneous determinant formula as printed, divided by (sqrt(1-a^2) sqrt(1-b^2))^N."""
    al, be = Fraction(al), Fraction(be)
    tau = homogeneous_tau(N, al, be, 0).const()
    fact = 1
    for n in range(1, N):
        fact *= factorial(n)
    sign = -1 if (N * (N - 1) // 2) % 2 else 1
    return Fraction(sign, fact * fact) * ((al - be) * (1 - al * be)) ** (N * N) * tau


def homogeneous_product_reduced(N: int, al, be) -> Fraction:
    al, be = Fraction(al), Fraction(be)
    return ((1 - al * al) * (1 - be * be)) ** (N * (N - 1) // 2)


def homogeneous_discrepancy(N: int, al, be) -> Fraction:
    """Ratio of the printed homogeneous determinant to the homogeneous product (1 if they agree)."""
    return homogeneous_dwpf_reduced(N, al, be) / homogeneous_product_reduced(N, al, be)


def molecule_sides(s: int, al, be) -> Tuple[Fraction, Fraction]:
    """(d_a d_b tau_s) tau_s - (d_a tau_s)(d_b tau_s) against tau_{s+1} tau_{s-1}; s >= 1."""
    if s < 1:
        raise ValueError("need s >= 1")
    t = homogeneous_tau(s, al, be, 1)
    lhs = t.derivative((1, 1)) * t.const() - t.derivative((1, 0)) * t.derivative((0, 1))
    rhs = homogeneous_tau(s + 1, al, be, 0).const() * homogeneous_tau(s - 1, al, be, 0).const()
    return lhs, rhs


def molecule_hirota_sides(s: int, al, be) -> Tuple[Fraction, Fraction]:
    """D_a D_b tau_s . tau_s against 2 tau_{s+1} tau_{s-1}."""
    t = homogeneous_tau(s, al, be, 1)
    lhs = hirota_apply([("alpha", 1), ("beta", 1)], t, t)
    rhs = 2 * homogeneous_tau(s + 1, al, be, 0).const() * homogeneous_tau(s - 1, al, be, 0).const()
    return lhs, rhs


def _minor(m, drop_rows, drop_cols):
    return det_exact([[x for j, x in enumerate(r) if j not in drop_cols]
                      for i, r in enumerate(m) if i not in drop_rows])


def jacobi_identity_sides(m) -> Tuple[Fraction, Fraction]:
    """D[n-1|n-1] D[n|n] - D[n-1|n] D[n|n-1] against D[n-1,n|n-1,n] D (0-based last two)."""
    n = len(m)
    if n < 2:
        raise ValueError("need at least a 2 x 2 matrix")
    a, b = n - 2, n - 1
    lhs = _minor(m, {a}, {a}) * _minor(m, {b}, {b}) - _minor(m, {a}, {b}) * _minor(m, {b}, {a})
    rhs = _minor(m, {a, b}, {a, b}) * det_exact(m)
    return lhs, rhs


def derivative_values(s: int, al, be) -> List[List[Fraction]]:
    return [[x.const() for x in row] for row in derivative_matrix(s, al, be, 0)]
