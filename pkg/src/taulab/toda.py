"""Finite 2-Toda hierarchy: dressed matrices, tau functions, hatted wave
functions, the bilinear residue identity and the bilinear PDE checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Sequence, Tuple

from .exact_core import (ExactMatrix, Jet, LaurentPoly, det_exact, hirota_apply,
                         laurent_residue)
from .partitions import Partition, partitions_in_box, partitions_of_size_at_most
from .sympoly import (TimeVector, character_all, character_poly, schur_eval,
                      tschur_eval)


@dataclass(frozen=True)
class TodaFamily:
    """Indices ``m < n``, constant ``(n-m) x (n-m)`` matrix ``A`` and time
    vectors of length ``n-m-1``.  Matrix rows/cols are labelled m..n-1."""

    m: int
    n: int
    A: ExactMatrix
    x: TimeVector
    y: TimeVector

    def __post_init__(self):
        L = self.n - self.m
        if L < 1:
            raise ValueError("need m < n")
        if (self.A.rows, self.A.cols) != (L, L):
            raise ValueError("A must be (n-m) x (n-m)")
        if len(self.x) > L - 1 or len(self.y) > L - 1:
            raise ValueError("time vectors longer than n-m-1")

    @property
    def size(self) -> int:
        return self.n - self.m

    def with_times(self, x=None, y=None) -> "TodaFamily":
        return TodaFamily(self.m, self.n, self.A,
                          self.x if x is None else TimeVector(x),
                          self.y if y is None else TimeVector(y))


def shift_matrix(L: int, transpose: bool = False) -> ExactMatrix:
    if transpose:
        return ExactMatrix.build(L, L, lambda i, j: Fraction(1 if i == j + 1 else 0))
    return ExactMatrix.build(L, L, lambda i, j: Fraction(1 if j == i + 1 else 0))


def _mat_exp_nilpotent(N: ExactMatrix) -> ExactMatrix:
    L = N.rows
    acc = ExactMatrix.identity(L)
    power = ExactMatrix.identity(L)
    for k in range(1, L):
        power = power @ N
        acc = acc + power.scale(Fraction(1, factorial(k)))
    return acc


def _time_generator(times: TimeVector, L: int, transpose: bool, sign: int) -> ExactMatrix:
    lam = shift_matrix(L, transpose)
    gen = ExactMatrix(L, L, [Fraction(0)] * (L * L))
    power = ExactMatrix.identity(L)
    for k in range(1, L):
        power = power @ lam
        tk = times[k]
        if isinstance(tk, (int, Fraction)) and tk == 0:
            continue
        gen = gen + power.scale(tk * sign)
    return gen


def dressed_matrix(fam: TodaFamily) -> ExactMatrix:
    """exp(sum x_k Lam^k) A exp(-sum y_k (Lam^T)^k)."""
    L = fam.size
    left = _mat_exp_nilpotent(_time_generator(fam.x, L, False, 1))
    right = _mat_exp_nilpotent(_time_generator(fam.y, L, True, -1))
    return left @ fam.A @ right


def dressed_matrix_zeta(fam: TodaFamily) -> ExactMatrix:
    """Same matrix from the character expansion: entries zeta_{j-i}(x), zeta_{i-j}(-y)."""
    L = fam.size
    zx = character_all(fam.x, L)
    zy = character_all(-fam.y, L)
    left = ExactMatrix.build(L, L, lambda i, j: zx[j - i] if j >= i else Fraction(0))
    right = ExactMatrix.build(L, L, lambda i, j: zy[i - j] if i >= j else Fraction(0))
    return left @ fam.A @ right


def _minor(a: ExactMatrix, rows: Sequence[int], cols: Sequence[int], m: int):
    return det_exact(a.submatrix([r - m for r in rows], [c - m for c in cols]))


def tau_family(fam: TodaFamily, s: int, a: ExactMatrix | None = None):
    """tau(s) = det of the leading (s-m) x (s-m) block of the dressed matrix."""
    if not fam.m <= s <= fam.n:
        raise ValueError("need m <= s <= n")
    a = dressed_matrix(fam) if a is None else a
    idx = list(range(fam.m, s))
    return _minor(a, idx, idx, fam.m)


def tau_polynomial(fam: TodaFamily, s: int):
    """Double character expansion sum A_{lam,mu} chi_lam(x) chi_mu(-y) over the box
    (n-s)^(s-m)."""
    L = s - fam.m
    if L == 0:
        return Fraction(1)
    box = partitions_in_box(L, fam.n - s)
    chi_x = {lam: character_poly(lam, fam.x) for lam in box}
    chi_y = {mu: character_poly(mu, -fam.y) for mu in box}

    def idx(lam):
        p = lam.padded(L)
        return [p[L - i] + i - 1 for i in range(1, L + 1)]

    total = Fraction(0)
    for lam in box:
        if chi_x[lam] == 0:
            continue
        ri = idx(lam)
        for mu in box:
            if chi_y[mu] == 0:
                continue
            total += det_exact(fam.A.submatrix(ri, idx(mu))) * chi_x[lam] * chi_y[mu]
    return total


WAVE_KINDS = ("w_inf", "w_0", "w_inf_star", "w_0_star")


class DegeneratePoint(ZeroDivisionError):
    """A tau denominator vanished at the sampled point."""


def wave_entries(fam: TodaFamily, which: str, k: int, s: int,
                 a: ExactMatrix | None = None):
    """Hatted wave-matrix entry as a ratio of minors of the dressed matrix."""
    m, n = fam.m, fam.n
    if not m <= s <= n - 1:
        raise ValueError("need m <= s <= n-1")
    a = dressed_matrix(fam) if a is None else a
    below = list(range(m, s))
    through = list(range(m, s + 1))
    if which == "w_inf":
        if not 0 <= k <= s - m:
            return Fraction(0)
        num = _minor(a, [r for r in through if r != s - k], below, m)
        den = _minor(a, below, below, m)
        sign = -1 if k % 2 else 1
    elif which == "w_0":
        if not 0 <= k <= n - s - 1:
            return Fraction(0)
        num = _minor(a, through, below + [s + k], m)
        den = _minor(a, below, below, m)
        sign = 1
    elif which == "w_0_star":
        if not 0 <= k <= s - m:
            return Fraction(0)
        num = _minor(a, below, [c for c in through if c != s - k], m)
        den = _minor(a, through, through, m)
        sign = -1 if k % 2 else 1
    elif which == "w_inf_star":
        if not 0 <= k <= n - s - 1:
            return Fraction(0)
        num = _minor(a, below + [s + k], through, m)
        den = _minor(a, through, through, m)
        sign = 1
    else:
        raise ValueError(f"unknown wave kind {which!r}")
    if den == 0:
        raise DegeneratePoint("vanishing tau denominator")
    return sign * num / den


def hatted_wave_matrices(fam: TodaFamily) -> Tuple[ExactMatrix, ExactMatrix]:
    """(W_inf_hat, W_0_hat): lower and upper triangular, rows indexed by s."""
    a = dressed_matrix(fam)
    m, L = fam.m, fam.size
    winf = ExactMatrix.build(L, L, lambda i, j: wave_entries(fam, "w_inf", i - j, i + m, a)
                             if i >= j else Fraction(0))
    w0 = ExactMatrix.build(L, L, lambda i, j: wave_entries(fam, "w_0", j - i, i + m, a)
                           if j >= i else Fraction(0))
    return winf, w0


def epsilon(lam, K: int) -> List:
    """epsilon(lam) = (lam, lam^2/2, ..., lam^K/K)."""
    return [Fraction(lam) ** k / k for k in range(1, K + 1)]


def shifted_times(times: TimeVector, lam, sign: int, K: int) -> TimeVector:
    eps = epsilon(lam, K)
    return TimeVector([times[k] + sign * eps[k - 1] for k in range(1, K + 1)])


def generating_function_sides(fam: TodaFamily, which: str, s: int, lam) -> Tuple[Fraction, Fraction]:
    """(sum_k lam^k w_k(s), tau-ratio with literally shifted times)."""
    K = fam.size - 1
    a = dressed_matrix(fam)
    lam = Fraction(lam)
    if which in ("w_inf", "w_0_star"):
        kmax = s - fam.m
    else:
        kmax = fam.n - s - 1
    lhs = sum((lam ** k * wave_entries(fam, which, k, s, a) for k in range(kmax + 1)), Fraction(0))
    if which == "w_inf":
        rhs = tau_family(fam.with_times(x=shifted_times(fam.x, lam, -1, K)), s) / tau_family(fam, s, a)
    elif which == "w_0":
        rhs = tau_family(fam.with_times(y=shifted_times(fam.y, lam, -1, K)), s + 1) / tau_family(fam, s, a)
    elif which == "w_inf_star":
        rhs = tau_family(fam.with_times(x=shifted_times(fam.x, lam, 1, K)), s + 1) / tau_family(fam, s + 1, a)
    elif which == "w_0_star":
        rhs = tau_family(fam.with_times(y=shifted_times(fam.y, lam, 1, K)), s) / tau_family(fam, s + 1, a)
    else:
        raise ValueError(which)
    return lhs, rhs


# ------------------------------------------------------------ bilinear identity


def _laurent_matrix(M: ExactMatrix) -> ExactMatrix:
    return M.map(lambda e: e if isinstance(e, LaurentPoly) else LaurentPoly({0: e}))


def _shift_factor(L: int, kind: str) -> ExactMatrix:
    """Laurent matrices in lam for the eps(1/lam) shifts.

    x - eps(1/lam): left factor (1 - Lam/lam); x + eps(1/lam): left (1 - Lam/lam)^{-1}.
    y - eps(1/lam): right factor (1 - Lam^T/lam)^{-1}; y + eps(1/lam): right (1 - Lam^T/lam).
    """
    def entry(i, j):
        if kind == "x_minus":
            return LaurentPoly({0: 1}) if i == j else (LaurentPoly({-1: -1}) if j == i + 1 else LaurentPoly())
        if kind == "x_plus":
            return LaurentPoly({i - j: 1}) if j >= i else LaurentPoly()
        if kind == "y_minus":
            return LaurentPoly({j - i: 1}) if i >= j else LaurentPoly()
        if kind == "y_plus":
            return LaurentPoly({0: 1}) if i == j else (LaurentPoly({-1: -1}) if i == j + 1 else LaurentPoly())
        raise ValueError(kind)

    return ExactMatrix.build(L, L, entry)


def shifted_tau_laurent(fam: TodaFamily, s: int, kind: str) -> LaurentPoly:
    """tau(s) with one time set shifted by -/+ eps(1/lam), as a Laurent polynomial."""
    L = fam.size
    if s == fam.m:
        return LaurentPoly({0: 1})
    a = _laurent_matrix(dressed_matrix(fam))
    f = _shift_factor(L, kind)
    prod = f @ a if kind.startswith("x") else a @ f
    k = s - fam.m
    res = det_exact(prod.submatrix(range(k), range(k)))
    return res if isinstance(res, LaurentPoly) else LaurentPoly({0: res})


def _exp_series(c: Sequence, degree: int) -> LaurentPoly:
    """exp(sum_l c_l lam^l) truncated at lam^degree."""
    z = character_all(TimeVector(c), degree)
    return LaurentPoly({k: z[k] for k in range(degree + 1)})


def bilinear_residues(fam: TodaFamily, s: int, s2: int, x2: Sequence, y2: Sequence) -> Tuple[Fraction, Fraction]:
    """Both contour integrals of the 2-Toda bilinear identity as exact residues.

    ``fam`` carries (x, y); the primed family uses times (x2, y2).  Valid for
    m < s <= n-1 and m < s2 <= n.
    """
    m, n = fam.m, fam.n
    if not (m < s <= n - 1 and m < s2 <= n):
        raise ValueError("need m < s <= n-1 and m < s' <= n")
    K = fam.size - 1
    famp = fam.with_times(x=x2, y=y2)
    # the tau factors reach lam^{-2L}; the exponential must cover that plus the shift
    deg = 2 * fam.size + abs(s2 - s) + 3
    tau_s = tau_family(fam, s)
    tau_sp = tau_family(famp, s2)
    if tau_s == 0 or tau_sp == 0:
        raise DegeneratePoint("vanishing tau")
    dy = [fam.y[k] - famp.y[k] for k in range(1, K + 1)]
    dx = [fam.x[k] - famp.x[k] for k in range(1, K + 1)]
    lhs_int = (_exp_series(dy, deg)
               * shifted_tau_laurent(fam, s + 1, "y_minus")
               * shifted_tau_laurent(famp, s2 - 1, "y_plus")).shift(s2 - s - 2)
    rhs_int = (_exp_series(dx, deg)
               * shifted_tau_laurent(fam, s, "x_minus")
               * shifted_tau_laurent(famp, s2, "x_plus")).shift(s - s2)
    den = tau_s * tau_sp
    return laurent_residue(lhs_int) / den, laurent_residue(rhs_int) / den


# ------------------------------------------------------------- Hirota checks


def tau_jet(fam: TodaFamily, s: int, orders: Tuple[int, int] = (1, 1)) -> Jet:
    """tau(s) as a jet in (x_1, y_1) about the family's times."""
    vars_ = ("x1", "y1")
    x = list(fam.x.x) or [Fraction(0)]
    y = list(fam.y.x) or [Fraction(0)]
    x[0] = Jet.variable("x1", x[0], vars_, orders)
    y[0] = Jet.variable("y1", y[0], vars_, orders)
    a = dressed_matrix(TodaFamily(fam.m, fam.n, fam.A.map(lambda e: Jet.constant(e, vars_, orders)),
                                  TimeVector(x), TimeVector(y)))
    k = s - fam.m
    if k == 0:
        return Jet.constant(1, vars_, orders)
    return det_exact(a.submatrix(range(k), range(k)))


def toda_molecule_residual(fam: TodaFamily, s: int) -> Tuple[Fraction, Fraction]:
    """(D_x1 D_y1 tau_s.tau_s, -2 tau_{s+1} tau_{s-1}); equal when the equation holds."""
    if not fam.m < s < fam.n:
        raise ValueError("need m < s < n")
    if fam.size < 2:
        raise ValueError("need n - m >= 2 for x_1, y_1 to exist")
    t = tau_jet(fam, s)
    lhs = hirota_apply([("x1", 1), ("y1", 1)], t, t)
    rhs = -2 * tau_family(fam, s + 1) * tau_family(fam, s - 1)
    return lhs, rhs


def character_tau_jet(coeffs: Dict[Partition, Fraction], times: Sequence,
                      orders=(4, 2, 1)) -> Jet:
    """tau(x) = sum_lam c_lam chi_lam(x) as a jet in (x1, x2, x3)."""
    vars_ = ("x1", "x2", "x3")
    tv = list(times) + [0] * max(0, 3 - len(times))
    for k in range(3):
        tv[k] = Jet.variable(vars_[k], tv[k], vars_, orders)
    tv = TimeVector(tv)
    total = Jet.constant(0, vars_, orders)
    maxlen = max((len(l) for l in coeffs), default=0)
    maxpart = max((l[0] for l in coeffs if len(l)), default=0)
    zeta = character_all(tv, maxpart + maxlen + 1)

    def z(r):
        return zeta[r] if 0 <= r < len(zeta) else 0

    for lam, c in coeffs.items():
        if c == 0:
            continue
        L = len(lam)
        if L == 0:
            total = total + c
            continue
        mat = [[z(lam[i] + j - i) for j in range(L)] for i in range(L)]
        chi = det_exact(mat)
        total = total + chi * c
    return total


def kp_hirota_value(tau: Jet) -> Fraction:
    """(4 D1 D3 - D1^4 - 3 D2^2) tau.tau at the jet's point."""
    return (4 * hirota_apply([("x1", 1), ("x3", 1)], tau, tau)
            - hirota_apply([("x1", 4)], tau, tau)
            - 3 * hirota_apply([("x2", 2)], tau, tau))


# ------------------------------------------------------------- t-deformed tau


def t_deformed_tau(n: int, s: int, m: int, u: Sequence, v: Sequence, t) -> Fraction:
    """sum over lam in the (n-s)^(s-m) box of S_lam(u;t) S_lam(v)."""
    L = s - m
    if len(u) != L or len(v) != L:
        raise ValueError("need |u| = |v| = s - m")
    total = Fraction(0)
    for lam in partitions_in_box(L, n - s):
        total += tschur_eval(lam, u, t) * schur_eval(lam, v)
    return total


def t_deformed_tau_series(u: Sequence, v: Sequence, t, D: int) -> Jet:
    """Degree-truncated infinite-box limit: sum S_lam(u;t) S_lam(v) z^{|lam|}, |lam| <= D."""
    vars_, orders = ("z",), (D,)
    coeffs = {}
    for lam in partitions_of_size_at_most(D, len(v)):
        c = tschur_eval(lam, u, t) * schur_eval(lam, v)
        coeffs[(lam.size,)] = coeffs.get((lam.size,), 0) + c
    return Jet(vars_, orders, coeffs)


def hall_littlewood_product_series(u: Sequence, v: Sequence, t, D: int) -> Jet:
    """prod_{i,j} (1 - t u_i v_j z)/(1 - u_i v_j z) through z^D."""
    vars_, orders = ("z",), (D,)
    z = Jet.variable("z", 0, vars_, orders)
    acc = Jet.constant(1, vars_, orders)
    for ui in u:
        for vj in v:
            acc = acc * (1 - z * (Fraction(t) * ui * vj)) / (1 - z * (ui * vj))
    return acc


# -------------------------------------------------------- Jacobi identity


def jacobi_identity_sides(M) -> Tuple:
    """Desnanot-Jacobi: D[n-1;n-1] D[n;n] - D[n-1;n] D[n;n-1] versus D[n-1,n;n-1,n] D.

    ``D[j;k]`` removes row j and column k (last two indices n-1, n, 1-based)."""
    rows = M.to_rows() if isinstance(M, ExactMatrix) else [list(r) for r in M]
    n = len(rows)
    if n < 2:
        raise ValueError("need at least a 2x2 matrix")

    def minor(rr, cc):
        keep_r = [i for i in range(n) if i not in rr]
        keep_c = [j for j in range(n) if j not in cc]
        return det_exact([[rows[i][j] for j in keep_c] for i in keep_r])

    a, b = n - 2, n - 1
    lhs = minor([a], [a]) * minor([b], [b]) - minor([a], [b]) * minor([b], [a])
    rhs = minor([a, b], [a, b]) * det_exact(rows)
    return lhs, rhs
