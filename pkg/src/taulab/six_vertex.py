"""Six-vertex domain-wall partition function by several independent routes,
its Schur-coefficient expansion, and Slavnov's scalar product.

Points live at the square-root level: ``x_i^2 = u_i``, ``y_j^2 = v_j``,
``p^2 = q`` and (for the scalar product) ``w_k^2`` are the inhomogeneities.
Every half-integer power in the closed forms is then an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Tuple

from .exact_core import ExactMatrix, det_exact
from .partitions import Partition, conjugate, partitions_in_box
from .sympoly import complete_all, elementary, elementary_all, schur_eval


class DegenerateSpectralPoint(ValueError):
    """A closed form divides by zero at this point."""


@dataclass(frozen=True)
class SpectralPoint:
    x: Tuple[Fraction, ...]
    y: Tuple[Fraction, ...]
    p: Fraction
    w: Tuple[Fraction, ...] = ()

    def __init__(self, x: Sequence, y: Sequence, p, w: Sequence = ()):
        object.__setattr__(self, "x", tuple(Fraction(a) for a in x))
        object.__setattr__(self, "y", tuple(Fraction(a) for a in y))
        object.__setattr__(self, "p", Fraction(p))
        object.__setattr__(self, "w", tuple(Fraction(a) for a in w))
        if any(a == 0 for a in self.x + self.y + self.w) or self.p == 0:
            raise DegenerateSpectralPoint("square-root variables must be nonzero")

    @property
    def u(self):
        return tuple(a * a for a in self.x)

    @property
    def v(self):
        return tuple(a * a for a in self.y)

    @property
    def q(self):
        return self.p * self.p

    @property
    def W(self):
        """Inhomogeneities ``w_k^2`` as they enter the scalar product."""
        return tuple(a * a for a in self.w)

    def genericity(self) -> Dict[str, bool]:
        u, v, q = self.u, self.v, self.q
        return {
            "u_distinct": len(set(u)) == len(u),
            "v_distinct": len(set(v)) == len(v),
            "u_ne_v": all(a != b for a in u for b in v),
            "qu_ne_v": all(q * a != b for a in u for b in v),
            "q_generic": q not in (0, 1),
        }

    def is_generic(self) -> bool:
        return all(self.genericity().values())

    def swapped(self, i: int, j: int, which: str = "x") -> "SpectralPoint":
        seq = list(getattr(self, which))
        seq[i], seq[j] = seq[j], seq[i]
        kw = {"x": self.x, "y": self.y, "w": self.w, which: seq}
        return SpectralPoint(kw["x"], kw["y"], self.p, kw["w"])


@dataclass(frozen=True)
class DwpfValue:
    value: Fraction
    method: str
    point: SpectralPoint


METHODS = ("bruteforce", "monodromy", "izergin", "lascoux", "lascoux_schur", "kirillov_smirnov")


def _require_generic(pt: SpectralPoint):
    bad = [k for k, ok in pt.genericity().items() if not ok]
    if bad:
        raise DegenerateSpectralPoint("degenerate point: " + ", ".join(bad))


# ------------------------------------------------------------------ weights

def _sinh_weights(xi, yj, p):
    """(a, b, c) = sinh(lam(t-s+1)), sinh(lam(t-s)), sinh(lam) with e^{lam s}=x, e^{lam t}=y, e^{lam}=1/p."""
    half = Fraction(1, 2)
    a = (yj / (xi * p) - xi * p / yj) * half
    b = (yj / xi - xi / yj) * half
    c = (1 / p - p) * half
    return a, b, c


def _enumerate(N: int, weight):
    """Row-transfer sum over DWBC configurations.

    Paths enter every column from below and leave every row on the right;
    row 0 is the top row, column 0 the left column.  ``weight(i, j, kind)``
    gives the vertex weight for kind in {"a", "b", "c"}.
    """
    full = (1 << N) - 1
    states = {full: Fraction(1)}
    for i in range(N - 1, -1, -1):
        nxt: Dict[int, Fraction] = {}
        for below, acc in states.items():
            # sweep the row left to right carrying the horizontal occupancy
            partial = {(0, 0): acc}  # (above-mask, carry) -> value
            for j in range(N):
                bj = (below >> j) & 1
                upd: Dict[Tuple[int, int], Fraction] = {}
                for (above, carry), val in partial.items():
                    for top in (0, 1):
                        right = carry + bj - top
                        if right not in (0, 1):
                            continue
                        if carry == right and bj == top:
                            kind = "a" if carry == bj else "b"
                        else:
                            kind = "c"
                        w = weight(i, j, kind)
                        if w == 0:
                            continue
                        key = (above | (top << j), right)
                        upd[key] = upd.get(key, Fraction(0)) + val * w
                partial = upd
            for (above, carry), val in partial.items():
                if carry == 1:
                    nxt[above] = nxt.get(above, Fraction(0)) + val
        states = nxt
    return states.get(0, Fraction(0))


def configuration_count(N: int) -> int:
    """Number of DWBC configurations (all weights 1)."""
    return int(_enumerate(N, lambda i, j, kind: Fraction(1)))


def _bruteforce(N: int, pt: SpectralPoint) -> Fraction:
    table = [[_sinh_weights(pt.x[i], pt.y[j], pt.p) for j in range(N)] for i in range(N)]
    idx = {"a": 0, "b": 1, "c": 2}
    return _enumerate(N, lambda i, j, kind: table[i][j][idx[kind]])


# ---------------------------------------------------------------- monodromy

def _r_entries(es, et, e1):
    """[s-t+1], [s-t], [1] with [z] = sinh(lam z), given e^{lam s}, e^{lam t}, e^{lam}."""
    half = Fraction(1, 2)
    r = es / et
    return (r * e1 - 1 / (r * e1)) * half, (r - 1 / r) * half, (e1 - 1 / e1) * half


def _apply_monodromy(which: Tuple[int, int], es, ets: Sequence, e1, vec: Dict[Tuple[int, ...], Fraction]):
    """T_{ab}(s) = (L_1 ... L_M)_{ab} applied to a sparse vector on (C^2)^M.

    Site states are 1 (spin up, vacuum) and 2.  The local operator
    (L_{alpha beta})_{a b} is read off the R-matrix in the basis 11, 12, 21, 22.
    """
    a_aux, b_aux = which
    M = len(ets)
    ent = [_r_entries(es, et, e1) for et in ets]

    def local(k, alpha, beta, site):
        """Nonzero (new_site, weight) pairs of L_{alpha beta} on a site state."""
        full, diag, cross = ent[k]
        if alpha == beta:
            if alpha == 1:
                return [(site, full if site == 1 else diag)]
            return [(site, diag if site == 1 else full)]
        if alpha == 1 and beta == 2:
            return [(2, cross)] if site == 1 else []
        return [(1, cross)] if site == 2 else []

    out: Dict[Tuple[int, ...], Fraction] = {}
    for conf, coeff in vec.items():
        layer = {(a_aux, ()): coeff}
        for k in range(M):
            nxt = {}
            for (aux, prefix), val in layer.items():
                for beta in (1, 2):
                    if k == M - 1 and beta != b_aux:
                        continue
                    for new_site, w in local(k, aux, beta, conf[k]):
                        if w == 0:
                            continue
                        key = (beta, prefix + (new_site,))
                        nxt[key] = nxt.get(key, Fraction(0)) + val * w
            layer = nxt
        for (_, state), val in layer.items():
            out[state] = out.get(state, Fraction(0)) + val
    return {k: v for k, v in out.items() if v != 0}


def _monodromy(N: int, pt: SpectralPoint) -> Fraction:
    """<1| B(s_1) ... B(s_N) |0> with rapidities negated.

    The R-matrix entries are sinh(lam(s - t + ...)); the lattice weights use
    t - s.  Negating every rapidity (x -> 1/x, y -> 1/y) maps one onto the other.
    """
    e1 = 1 / pt.p
    ets = [1 / yj for yj in pt.y[:N]]
    vec = {(1,) * N: Fraction(1)}
    for i in range(N - 1, -1, -1):
        vec = _apply_monodromy((1, 2), 1 / pt.x[i], ets, e1, vec)
    return vec.get((2,) * N, Fraction(0))


# ---------------------------------------------------------- closed forms

def upsilon(N: int, pt: SpectralPoint) -> Fraction:
    """2^{N(N-1)} q^{N(N-1)/2} (prod u_i v_i)^{(N-1)/2}."""
    out = Fraction(2) ** (N * (N - 1)) * pt.p ** (N * (N - 1))
    for i in range(N):
        out *= (pt.x[i] * pt.y[i]) ** (N - 1)
    return out


def _izergin(N: int, pt: SpectralPoint) -> Fraction:
    u, v, q = pt.u[:N], pt.v[:N], pt.q
    num = Fraction(1)
    for i in range(N):
        for j in range(N):
            num *= (u[i] - v[j]) * (q * u[i] - v[j])
    den = Fraction(1)
    for i in range(N):
        for j in range(i + 1, N):
            den *= (u[i] - u[j]) * (v[j] - v[i])
    mat = [[1 / ((u[i] - v[j]) * (q * u[i] - v[j])) for j in range(N)] for i in range(N)]
    return upsilon(N, pt) * num / den * det_exact(mat)


def kappa_matrix(N: int, pt: SpectralPoint) -> List[List[Fraction]]:
    """(2N-1) x N master matrix kappa_{j,k}, stored 0-based."""
    q = pt.q
    e = elementary_all(pt.v[:N], 2 * N)

    def ev(r):
        return e[r] if 0 <= r <= N else Fraction(0)

    rows = []
    for j in range(1, 2 * N):
        row = []
        for k in range(1, N + 1):
            r = N - j + k - 1
            row.append((q ** (j - k + 1) - q ** (k - 1)) / (q - 1) * (-1) ** (r % 2) * ev(r))
        rows.append(row)
    return rows


def _h_band(u, N: int, width: int) -> List[List[Fraction]]:
    h = complete_all(u, width)
    return [[h[j - i] if j >= i else Fraction(0) for j in range(width)] for i in range(N)]


def _lascoux(N: int, pt: SpectralPoint) -> Fraction:
    H = ExactMatrix.from_rows(_h_band(pt.u[:N], N, 2 * N - 1))
    K = ExactMatrix.from_rows(kappa_matrix(N, pt))
    return upsilon(N, pt) * (H @ K).det()


def _minor_coeff(master: List[List[Fraction]], lam: Partition, N: int) -> Fraction:
    """det[master_{lam_{N+1-i}+i, j}] (1-based labels)."""
    parts = lam.padded(N)
    rows = [master[parts[N - i] + i - 1] for i in range(1, N + 1)]
    return det_exact(rows)


def schur_coeffs(N: int, pt: SpectralPoint) -> Dict[Partition, Fraction]:
    """c^{(N)}_lam for every lam in the (N-1)^N box."""
    kap = kappa_matrix(N, pt)
    return {lam: _minor_coeff(kap, lam, N) for lam in partitions_in_box(N, N - 1)}


def _lascoux_schur(N: int, pt: SpectralPoint) -> Fraction:
    total = Fraction(0)
    u = pt.u[:N]
    for lam, c in schur_coeffs(N, pt).items():
        if c:
            total += c * schur_eval(lam, u)
    return upsilon(N, pt) * total


# ------------------------------------------------------- Kirillov-Smirnov

def _e_scaled(j: int, groups) -> Fraction:
    """e_j of the multiset union of ``scale * w`` over (scale, values) groups."""
    vals = [s * w for s, ws in groups for w in ws]
    return elementary(j, vals) if j >= 0 else Fraction(0)


def ks_T(z: int, j: int, pexp: int, I: Sequence[int], w: Sequence, p: Fraction) -> Fraction:
    """T^{(z)}_{(j,p)}({I}|w); ``I`` is a set of 0-based indices, q^{1/2} = p."""
    rest = [w[n] for n in range(len(w)) if n not in set(I)]
    first = _e_scaled(j, [(p, w), (1 / p, rest)]) / p ** pexp
    if z == 0:
        return first
    return first - z * p ** pexp * _e_scaled(j, [(p, rest), (1 / p, w)])


def _ks_prefactor(N: int, pt: SpectralPoint) -> Fraction:
    # the q^{N/2} prefactor alone leaves these forms short by q^{N^2/2}
    p = pt.p
    return upsilon(N, pt) * p ** (N * N) / (p ** N * (p - 1 / p) ** N * elementary(N, pt.v[:N]))


def kirillov_smirnov_ks1(N: int, pt: SpectralPoint) -> Fraction:
    u, v, p = pt.u[:N], pt.v[:N], pt.p
    rows = []
    for j in range(2 * N):
        rows.append([ks_T(0, j, 0, [k], u, p) for k in range(N)]
                    + [ks_T(1, j, 0, [k], v, p) for k in range(N)])
    vdm = Fraction(1)
    for i in range(N):
        for j in range(i + 1, N):
            vdm *= (u[i] - u[j]) * (v[i] - v[j])
    return _ks_prefactor(N, pt) * det_exact(rows) / vdm


def kirillov_smirnov_ks2(N: int, pt: SpectralPoint) -> Fraction:
    u, v, p = pt.u[:N], pt.v[:N], pt.p
    rows = []
    for j in range(1, 2 * N + 1):
        rows.append([ks_T(0, j - k, k - 1, range(k), u, p) for k in range(1, N + 1)]
                    + [ks_T(1, j - k, k - 1, range(k), v, p) for k in range(1, N + 1)])
    return _ks_prefactor(N, pt) * det_exact(rows)


def _ks_b(z: int, j: int, k: int, w, p) -> Fraction:
    r = j - k
    if r < 0:
        return Fraction(0)
    out = _e_scaled(r, [(p, w)]) / p ** (k - 1)
    if z:
        out -= z * p ** (k - 1) * _e_scaled(r, [(1 / p, w)])
    return out


def kirillov_smirnov_ks4(N: int, pt: SpectralPoint) -> Fraction:
    u, v, p = pt.u[:N], pt.v[:N], pt.p
    rows = [[_ks_b(0, j, k, u, p) for k in range(1, N + 1)]
            + [_ks_b(1, j, k, v, p) for k in range(1, N + 1)] for j in range(1, 2 * N + 1)]
    return _ks_prefactor(N, pt) * det_exact(rows)


def _ks8_matrix(N: int, pt: SpectralPoint) -> List[List[Fraction]]:
    q = pt.q
    eu = elementary_all(pt.u[:N], 2 * N)
    ev = elementary_all(pt.v[:N], 2 * N)

    def g(seq, r):
        return seq[r] if 0 <= r <= N else Fraction(0)

    rows = []
    for j in range(1, 2 * N + 1):
        rows.append([g(eu, N - j + k) for k in range(1, N + 1)]
                    + [(q ** k - q ** (j - k)) / (1 - q) * g(ev, N - j + k) for k in range(1, N + 1)])
    return rows


def kirillov_smirnov_ks8(N: int, pt: SpectralPoint) -> Fraction:
    return upsilon(N, pt) / elementary(N, pt.v[:N]) * det_exact(_ks8_matrix(N, pt))


def phi_matrix(N: int, pt: SpectralPoint) -> List[List[Fraction]]:
    """(2N-1) x N matrix phi_{j,k} without the (-1)^{(N-1)/2} factor.

    That factor multiplies every row; it is applied once per N x N minor as
    (-1)^{N(N-1)/2}, which is an integer sign for every N.
    """
    q = pt.q
    e = elementary_all(pt.v[:N], 2 * N)

    def g(r):
        return e[r] if 0 <= r <= N else Fraction(0)

    return [[(-1) ** (j % 2) * (q ** k - q ** (j - k)) / (1 - q) * g(N - j + k)
             for k in range(1, N + 1)] for j in range(1, 2 * N)]


def _phi_sign(N: int) -> int:
    return -1 if (N * (N - 1) // 2) % 2 else 1


def kirillov_smirnov_ks9(N: int, pt: SpectralPoint) -> Fraction:
    """Laplace-expanded form: sum over lam in the N^{N-1} box, paired with lam'."""
    u = pt.u[:N]
    eu = elementary_all(u, 3 * N)
    phi = phi_matrix(N, pt)

    def g(r):
        return eu[r] if 0 <= r <= N else Fraction(0)

    total = Fraction(0)
    for lam in partitions_in_box(N - 1, N):
        left = det_exact([[g(lam[j] + k - j) for k in range(N)] for j in range(N)])
        if left == 0:
            continue
        lc = conjugate(lam).padded(N)
        right = det_exact([phi[lc[N - j] + j - 1] for j in range(1, N + 1)])
        total += left * right
    return upsilon(N, pt) / elementary(N, pt.v[:N]) * _phi_sign(N) * total


def kirillov_smirnov_ks10(N: int, pt: SpectralPoint) -> Fraction:
    H = ExactMatrix.from_rows(_h_band(pt.u[:N], N, 2 * N - 1))
    P = ExactMatrix.from_rows(phi_matrix(N, pt))
    return upsilon(N, pt) / elementary(N, pt.v[:N]) * _phi_sign(N) * (H @ P).det()


KS_FORMS = {
    "ks1": kirillov_smirnov_ks1,
    "ks2": kirillov_smirnov_ks2,
    "ks4": kirillov_smirnov_ks4,
    "ks8": kirillov_smirnov_ks8,
    "ks9": kirillov_smirnov_ks9,
    "ks10": kirillov_smirnov_ks10,
}


# ------------------------------------------------------------------ driver

def dwpf(N: int, pt: SpectralPoint, method: str = "izergin") -> DwpfValue:
    if N < 1:
        raise ValueError("N must be positive")
    if len(pt.x) < N or len(pt.y) < N:
        raise ValueError("point has fewer than N rapidities")
    if method == "bruteforce":
        if N > 6:
            raise ValueError("brute force limited to N <= 6")
        val = _bruteforce(N, pt)
    elif method == "monodromy":
        if N > 6:
            raise ValueError("monodromy limited to N <= 6")
        val = _monodromy(N, pt)
    else:
        sub = SpectralPoint(pt.x[:N], pt.y[:N], pt.p)
        _require_generic(sub)
        fn = {"izergin": _izergin, "lascoux": _lascoux, "lascoux_schur": _lascoux_schur,
              "kirillov_smirnov": kirillov_smirnov_ks1}.get(method)
        if fn is None:
            raise ValueError(f"unknown method {method!r}")
        val = fn(N, pt)
    return DwpfValue(val, method, pt)


def normalization_bridge(N: int, pt: SpectralPoint) -> Fraction:
    """Z_bruteforce / Z_izergin = (1-q)^N (2p)^{-N(2N-1)} prod (x_i y_i)^{-2(N-1)}.

    Every non-c vertex carries 1/(2 x_i y_j p) once written over u, v, q; the
    rest is the c weight and the gauge between c1 and c2 vertices.
    """
    out = (1 - pt.q) ** N / (2 * pt.p) ** (N * (2 * N - 1))
    for i in range(N):
        out /= (pt.x[i] * pt.y[i]) ** (2 * (N - 1))
    return out


# ------------------------------------------------------------------ Slavnov
#
# The scalar-product formulas use q = e^{2 lam} and w_k = e^{2 lam t_k}; the
# point's p and w are their square roots.

def slavnov_upsilon(N: int, M: int, pt: SpectralPoint) -> Fraction:
    p, q = pt.p, pt.q
    u, v, W = pt.u[:N], pt.v[:N], pt.W[:M]
    num = Fraction(-1) ** (N * N) * p ** (-N * M) * q ** (-N * (N - 1)) * (p - 1 / p) ** N
    den = Fraction(1)
    for i in range(N):
        den *= (pt.x[i] * pt.y[i]) ** (M - 1)
    for wk in W:
        den *= wk ** N
    for i in range(N):
        for j in range(N):
            if i != j:
                den *= p * v[i] - v[j] / p
    for i in range(N):
        for j in range(i + 1, N):
            den *= v[j] - v[i]
    return num / den


def _slavnov_entry(ui, j: int, v, W, q) -> Fraction:
    N = len(v)
    t1 = Fraction(1)
    t2 = Fraction(1)
    for wk in W:
        t1 *= (ui - wk) * (q * v[j] - wk)
        t2 *= (q * ui - wk) * (v[j] - wk)
    for k in range(N):
        if k == j:
            continue
        t1 *= (q * ui - v[k]) * (q * v[k] - v[j])
        t2 *= (q * v[k] - ui) * (q * v[j] - v[k])
    return (t1 - t2) / (v[j] - ui)


def _slavnov_determinant(N: int, M: int, pt: SpectralPoint) -> Fraction:
    u, v, W, q = pt.u[:N], pt.v[:N], pt.W[:M], pt.q
    vdm = Fraction(1)
    for i in range(N):
        for j in range(i + 1, N):
            vdm *= u[i] - u[j]
    mat = [[_slavnov_entry(u[i], j, v, W, q) for j in range(N)] for i in range(N)]
    return slavnov_upsilon(N, M, pt) / vdm * det_exact(mat)


def rho_matrix(N: int, M: int, pt: SpectralPoint) -> List[List[Fraction]]:
    """(N+M-1) x N master matrix rho_{k,j}, stored 0-based."""
    v, W, q = pt.v[:N], pt.W[:M], pt.q
    ew = elementary_all(W, M)
    top = N + M - 1
    out = [[Fraction(0)] * N for _ in range(top)]
    for j in range(N):
        hat = [v[l] for l in range(N) if l != j]
        eh = elementary_all(hat, N)

        def E(r):
            return eh[r] if 0 <= r <= N - 1 else Fraction(0)

        for k in range(1, top + 1):
            acc = Fraction(0)
            for xi in range(k, top + 1):
                for eta in range(0, k):
                    for al in range(max(0, xi - N + 1), min(M, xi) + 1):
                        e1 = E(N - 1 - xi + al)
                        if e1 == 0:
                            continue
                        for ze in range(0, min(M, eta) + 1):
                            e2 = E(N - 1 - eta + ze)
                            if e2 == 0:
                                continue
                            sign = -1 if (N + xi + eta) % 2 else 1
                            qq = q ** (xi - eta + 2 * ze - al) - q ** (eta - xi + 2 * al - ze)
                            acc += (sign * q ** (N - 1) * qq * ew[M - al] * ew[M - ze]
                                    * e1 * e2 * v[j] ** (xi + eta))
            out[k - 1][j] = acc / v[j] ** k
    return out


def slavnov_upsilon_prime(N: int, M: int, pt: SpectralPoint) -> Fraction:
    sign = -1 if (N * (N - 1) // 2) % 2 else 1
    return sign * slavnov_upsilon(N, M, pt)


def _slavnov_symmetric(N: int, M: int, pt: SpectralPoint) -> Fraction:
    H = ExactMatrix.from_rows(_h_band(pt.u[:N], N, N + M - 1))
    R = ExactMatrix.from_rows(rho_matrix(N, M, pt))
    return slavnov_upsilon_prime(N, M, pt) * (H @ R).det()


def slavnov_coeffs(N: int, M: int, pt: SpectralPoint) -> Dict[Partition, Fraction]:
    """g^{(M,N)}_lam for lam in the (M-1)^N box."""
    rho = rho_matrix(N, M, pt)
    return {lam: _minor_coeff(rho, lam, N) for lam in partitions_in_box(N, M - 1)}


def _slavnov_schur(N: int, M: int, pt: SpectralPoint) -> Fraction:
    u = pt.u[:N]
    total = Fraction(0)
    for lam, g in slavnov_coeffs(N, M, pt).items():
        if g:
            total += g * schur_eval(lam, u)
    return slavnov_upsilon_prime(N, M, pt) * total


def _require_slavnov_generic(N: int, M: int, pt: SpectralPoint):
    if len(pt.w) < M:
        raise ValueError("need M inhomogeneities")
    if M < 2 or N > M:
        raise ValueError("need M_sites >= 2 and N <= M_sites")
    u, v, q = pt.u[:N], pt.v[:N], pt.q
    bad = (len(set(u)) != N or len(set(v)) != N or q in (0, 1)
           or any(a == b for a in u for b in v)
           or any(pt.p * v[i] == v[j] / pt.p for i in range(N) for j in range(N) if i != j))
    if bad:
        raise DegenerateSpectralPoint("degenerate point for the scalar product")


def slavnov(N: int, M: int, pt: SpectralPoint, method: str = "determinant") -> Fraction:
    """Slavnov's scalar product as an algebraic expression (no Bethe equations imposed)."""
    _require_slavnov_generic(N, M, pt)
    if method == "determinant":
        return _slavnov_determinant(N, M, pt)
    if method == "symmetric":
        return _slavnov_symmetric(N, M, pt)
    if method == "schur":
        return _slavnov_schur(N, M, pt)
    raise ValueError(f"unknown method {method!r}")


# ----------------------------------------------------------- Korepin checks

def korepin_symmetric(N: int, pt: SpectralPoint) -> bool:
    """Z is unchanged by adjacent swaps of x's and of y's (these generate S_N)."""
    base = _bruteforce(N, pt)
    for i in range(N - 1):
        for which in ("x", "y"):
            if _bruteforce(N, pt.swapped(i, i + 1, which)) != base:
                return False
    return True


def korepin_recursion_sides(N: int, pt: SpectralPoint) -> Tuple[Fraction, Fraction]:
    """Both sides of the recursion after setting x_1 = y_1 / p."""
    x = (pt.y[0] / pt.p,) + pt.x[1:N]
    y = pt.y[:N]
    spec = SpectralPoint(x, y, pt.p)
    lhs = _bruteforce(N, spec)
    c = _sinh_weights(x[0], y[0], pt.p)[2]
    rhs = c
    for i in range(1, N):
        rhs *= _sinh_weights(x[i], y[0], pt.p)[1]
    for j in range(1, N):
        rhs *= _sinh_weights(x[0], y[j], pt.p)[1]
    if N > 1:
        rhs *= _bruteforce(N - 1, SpectralPoint(x[1:], y[1:], pt.p))
    return lhs, rhs


def korepin_degree_ok(N: int, pt: SpectralPoint, probes: Sequence) -> bool:
    """x_1^{N-1} Z is a polynomial of degree N-1 in u_1.

    The interpolant through N samples must reproduce every extra probe.
    """
    probes = [Fraction(a) for a in probes]
    if len(probes) < N + 1 or len(set(a * a for a in probes)) < len(probes):
        raise ValueError("need N+1 probes with distinct squares")

    def f(a):
        pt2 = SpectralPoint((a,) + pt.x[1:N], pt.y[:N], pt.p)
        return a ** (N - 1) * _bruteforce(N, pt2)

    nodes = [(a * a, f(a)) for a in probes[:N]]
    for a in probes[N:]:
        t = a * a
        interp = Fraction(0)
        for k, (uk, fk) in enumerate(nodes):
            term = fk
            for m, (um, _) in enumerate(nodes):
                if m != k:
                    term *= (t - um) / (uk - um)
            interp += term
        if interp != f(a):
            return False
    return True
