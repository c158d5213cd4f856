"""The q -> 0 boson (phase) model on sites 0..M.

``L_j(u) = [[1/u, phi_j^+], [phi_j, u]]`` and ``T(u) = L_M ... L_0``.  States are
sparse maps from occupation tuples to exact coefficients.  Scalar products and
the two families of correlation functions are computed by brute force, by
determinants, and by Schur / skew-Schur sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .exact_core import det_exact
from .partitions import Partition, occupation_to_partition, partitions_in_box
from .sympoly import VariableSet, complete, schur_eval, skew_schur_eval


class DegeneratePoint(ValueError):
    """Coincident variables hit a pole of a closed form."""


def _vals(u) -> Tuple[Fraction, ...]:
    if isinstance(u, VariableSet):
        u = u.values
    return tuple(Fraction(a) for a in u)


def _nonzero(*seqs):
    for s in seqs:
        if any(a == 0 for a in s):
            raise DegeneratePoint("variables must be nonzero")


# ------------------------------------------------------------------ states

@dataclass(frozen=True)
class PhaseState:
    M: int
    terms: Mapping[Tuple[int, ...], Fraction]

    def __init__(self, M: int, terms: Optional[Mapping[Tuple[int, ...], object]] = None):
        clean = {}
        for occ, c in (terms or {}).items():
            occ = tuple(int(n) for n in occ)
            if len(occ) != M + 1 or any(n < 0 for n in occ):
                raise ValueError(f"bad occupation {occ}")
            if c != 0:
                clean[occ] = Fraction(c)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def vacuum(cls, M: int) -> "PhaseState":
        return cls(M, {(0,) * (M + 1): 1})

    @classmethod
    def basis(cls, M: int, occ: Sequence[int], coeff=1) -> "PhaseState":
        return cls(M, {tuple(occ): coeff})

    def coeff(self, occ: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(occ), Fraction(0))

    def vacuum_coeff(self) -> Fraction:
        return self.coeff((0,) * (self.M + 1))

    def particle_numbers(self) -> set:
        return {sum(o) for o in self.terms}

    def __add__(self, other: "PhaseState") -> "PhaseState":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return PhaseState(self.M, out)

    def __sub__(self, other: "PhaseState") -> "PhaseState":
        return self + PhaseState(self.M, {k: -v for k, v in other.terms.items()})

    def __eq__(self, other):
        return isinstance(other, PhaseState) and self.M == other.M and self.terms == other.terms

    def __hash__(self):
        return hash((self.M, frozenset(self.terms.items())))


_ENTRY = {"A": (0, 0), "B": (0, 1), "C": (1, 0), "D": (1, 1)}


def monodromy_apply(which: str, u, state: PhaseState) -> PhaseState:
    """Apply A, B, C or D of T(u) = L_M ... L_0, threading the auxiliary index."""
    if which not in _ENTRY:
        raise ValueError(f"unknown monodromy entry {which!r}")
    u = Fraction(u)
    if u == 0:
        raise DegeneratePoint("u must be nonzero")
    a, b = _ENTRY[which]
    M = state.M
    out: Dict[Tuple[int, ...], Fraction] = {}
    for occ, c in state.terms.items():
        # layer: (aux index, new occupations built from site M downwards) -> coeff
        layer = {(a, ()): c}
        for site in range(M, -1, -1):
            n = occ[site]
            nxt: Dict[Tuple[int, Tuple[int, ...]], Fraction] = {}
            for (aux, built), val in layer.items():
                for beta in (0, 1):
                    if site == 0 and beta != b:
                        continue
                    if aux == beta:
                        w, m = (1 / u if aux == 0 else u), n
                    elif aux == 0:      # phi^+
                        w, m = Fraction(1), n + 1
                    else:               # phi
                        if n == 0:
                            continue
                        w, m = Fraction(1), n - 1
                    key = (beta, (m,) + built)
                    nxt[key] = nxt.get(key, Fraction(0)) + val * w
            layer = nxt
        for (_, built), val in layer.items():
            out[built] = out.get(built, Fraction(0)) + val
    return PhaseState(M, out)


def apply_string(ops: Sequence[Tuple[str, object]], state: PhaseState) -> PhaseState:
    """Apply ``ops`` written left to right as an operator product (rightmost acts first)."""
    for which, u in reversed(list(ops)):
        state = monodromy_apply(which, u, state)
    return state


def state_vector(M: int, u) -> PhaseState:
    """B(u_1) ... B(u_N) |0>."""
    return apply_string([("B", a) for a in _vals(u)], PhaseState.vacuum(M))


# ----------------------------------------------------------- scalar product

def _vdm_sq(u) -> Fraction:
    out = Fraction(1)
    for j in range(len(u)):
        for k in range(j + 1, len(u)):
            out *= u[j] ** 2 - u[k] ** 2
    return out


def _reorder_sign(N: int) -> int:
    # the printed closed form drops this sign against the operator definition
    return -1 if (N * (N - 1) // 2) % 2 else 1


def _scalar_bruteforce(M, u, v) -> Fraction:
    ket = state_vector(M, u)
    return apply_string([("C", b) for b in v], ket).vacuum_coeff()


def _scalar_determinant(M, u, v) -> Fraction:
    N = len(u)
    U = [a * a for a in u]
    V = [b * b for b in v]
    if len(set(U)) < N or len(set(V)) < N:
        raise DegeneratePoint("determinant route needs distinct squares")
    pref = Fraction(_reorder_sign(N))
    for j in range(N):
        for k in range(j + 1, N):
            pref *= u[j] * u[k] * v[j] * v[k] / ((U[j] - U[k]) * (V[j] - V[k]))
    e = M + N - 1
    mat = [[complete(e, [U[m], V[l]]) / (u[m] * v[l]) ** e for m in range(N)] for l in range(N)]
    return pref * det_exact(mat)


def _scalar_schur(M, u, v) -> Fraction:
    N = len(u)
    U = [a * a for a in u]
    Vinv = [1 / (b * b) for b in v]
    pref = Fraction(1)
    for a, b in zip(u, v):
        pref *= (b / a) ** M
    return pref * sum((schur_eval(lam, U) * schur_eval(lam, Vinv)
                       for lam in partitions_in_box(N, M)), Fraction(0))


def scalar_product(N: int, M: int, u, v, method: str = "determinant") -> Fraction:
    u, v = _vals(u), _vals(v)
    if len(u) != N or len(v) != N:
        raise ValueError("need exactly N variables on each side")
    _nonzero(u, v)
    fn = {"bruteforce": _scalar_bruteforce, "determinant": _scalar_determinant,
          "schur": _scalar_schur}.get(method)
    if fn is None:
        raise ValueError(f"unknown method {method!r}")
    return fn(M, u, v)


# ---------------------------------------------------------- plane partitions

@dataclass(frozen=True)
class PlanePartition:
    array: Tuple[Tuple[int, ...], ...]
    t: int

    def __post_init__(self):
        a = self.array
        for j, row in enumerate(a):
            for k, x in enumerate(row):
                if x < 0 or x > self.t:
                    raise ValueError("entry outside [0, t]")
                if j + 1 < len(a) and a[j + 1][k] > x:
                    raise ValueError("columns must weakly decrease")
                if k + 1 < len(row) and row[k + 1] > x:
                    raise ValueError("rows must weakly decrease")

    @property
    def volume(self) -> int:
        return sum(map(sum, self.array))


CENSUS_LIMIT = 10 ** 6


def _rows_below(bound: Tuple[int, ...]):
    """Weakly decreasing rows dominated entrywise by ``bound``."""
    s = len(bound)

    def rec(k, cap, prefix):
        if k == s:
            yield tuple(prefix)
            return
        for x in range(min(cap, bound[k]), -1, -1):
            prefix.append(x)
            yield from rec(k + 1, x, prefix)
            prefix.pop()

    yield from rec(0, bound[0] if s else 0, [])


def iter_plane_partitions(r: int, s: int, t: int):
    def rec(rows, bound):
        if len(rows) == r:
            yield tuple(rows)
            return
        for row in _rows_below(bound):
            rows.append(row)
            yield from rec(rows, row)
            rows.pop()

    yield from rec([], (t,) * s)


def plane_partition_census(r: int, s: int, t: int) -> Dict[int, int]:
    """Volume -> number of plane partitions in an r x s x t box, by enumeration."""
    if min(r, s, t) < 0:
        raise ValueError("box sides must be nonnegative")
    if r == 0 or s == 0:
        return {0: 1}
    if macmahon_count(r, s, t) > CENSUS_LIMIT:
        raise ValueError("box too large to enumerate")
    out: Dict[int, int] = {}
    for pp in iter_plane_partitions(r, s, t):
        vol = sum(map(sum, pp))
        out[vol] = out.get(vol, 0) + 1
    return out


def _pmul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pdiv_exact(a: List[int], b: List[int]) -> List[int]:
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c, rem = divmod(a[i + len(b) - 1], b[-1])
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[i] = c
        for j, y in enumerate(b):
            a[i + j] -= c * y
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return q


def macmahon_polynomial(r: int, s: int, t: int) -> Dict[int, int]:
    """prod_{i,j} (1 - q^{t+i+j-1}) / (1 - q^{i+j-1}) as exponent -> coefficient."""
    num, den = [1], [1]
    for i in range(1, r + 1):
        for j in range(1, s + 1):
            a = [0] * (t + i + j)
            a[0], a[-1] = 1, -1
            b = [0] * (i + j)
            b[0], b[-1] = 1, -1
            num, den = _pmul(num, a), _pmul(den, b)
    quo = _pdiv_exact(num, den)
    return {e: c for e, c in enumerate(quo) if c}


def macmahon_count(r: int, s: int, t: int) -> int:
    """Number of plane partitions in the box (the product at q = 1)."""
    out = Fraction(1)
    for i in range(1, r + 1):
        for j in range(1, s + 1):
            out *= Fraction(t + i + j - 1, i + j - 1)
    return int(out)


def evaluate_poly(poly: Mapping[int, int], q) -> Fraction:
    q = Fraction(q)
    return sum((c * q ** e for e, c in poly.items()), Fraction(0))


def qenum_specialization(N: int, M: int, p, method: str = "determinant") -> Tuple[Fraction, Fraction]:
    """Scalar product at u_j = p^{j-1}, v_j = p^{-j} against p^{-N^2 M} times the box generating function."""
    p = Fraction(p)
    if p == 0 or p * p == 1:
        raise DegeneratePoint("need p != 0 and q = p^2 != 1")
    u = [p ** (j - 1) for j in range(1, N + 1)]
    v = [p ** (-j) for j in range(1, N + 1)]
    lhs = scalar_product(N, M, u, v, method)
    rhs = p ** (-N * N * M) * evaluate_poly(macmahon_polynomial(N, N, M), p * p)
    return lhs, rhs


# --------------------------------------------------- correlation functions

def _first_class_box(N: int, M: int, k: int) -> List[Partition]:
    return [lam for lam in partitions_in_box(N, M) if lam[N - 1] <= k and lam[0] >= k]


def _second_class_box(N: int, M: int, p: int) -> List[Partition]:
    return [lam for lam in partitions_in_box(N, M)
            if len(lam) >= p and all(lam[i] <= 1 for i in range(N - p, N))]


def omega_hat_v1(M: int, u, v) -> Fraction:
    """1 / prod_{j<k}(u_j^2 - u_k^2) times (prod_m u_m prod_{l>=2} v_l)^{-M}."""
    out = 1 / _vdm_sq(u)
    for a in u:
        out /= a ** M
    for b in v[1:]:
        out /= b ** M
    return out


def first_class_determinant(N: int, M: int, k: int, u, v_rest) -> Fraction:
    """Omega det[Lambda^{(M-k)}] = <0| phi_k C(v_2)..C(v_N) B(u_1)..B(u_N) |0>."""
    u, vr = _vals(u), _vals(v_rest)
    U = [a * a for a in u]
    V = [None] + [b * b for b in vr]  # V[j] for j = 2..N sits at index j-1
    q = M - k
    rows = [[complete(M - q, [U[c]] + V[1:]) for c in range(N)]]
    for j in range(2, N + 1):
        rows.append([complete(M - 1 + j, [U[c]] + V[j - 1:]) for c in range(N)])
    return _reorder_sign(N) * omega_hat_v1(M, u, (Fraction(1),) + vr) * det_exact(rows)


def correlation_first_class(N: int, M: int, k: int, u, v_rest, method: str = "skew") -> Fraction:
    """sum over lam in {(M)^{N-1}, k}, lam >= (k) of S_lam(u^2) S_{lam/(k)}(v_2^{-2}, ..).

    ``bruteforce`` and ``determinant`` compute <0| phi_k C(v_2)..C(v_N) B(u_1)..B(u_N) |0>
    and divide by its explicit factor (prod_{j>=2} v_j / prod u_j)^M.
    """
    u, vr = _vals(u), _vals(v_rest)
    if len(u) != N or len(vr) != N - 1:
        raise ValueError("need N u's and N-1 v's")
    if not 0 <= k <= M:
        raise ValueError("need 0 <= k <= M")
    _nonzero(u, vr)
    factor = Fraction(1)
    for b in vr:
        factor *= b ** M
    for a in u:
        factor /= a ** M
    if method == "skew":
        U = [a * a for a in u]
        Vi = [1 / (b * b) for b in vr]
        kp = Partition((k,))
        return sum((schur_eval(lam, U) * skew_schur_eval(lam, kp, Vi)
                    for lam in _first_class_box(N, M, k)), Fraction(0))
    if method == "bruteforce":
        ket = state_vector(M, u)
        bra = apply_string([("C", b) for b in vr], ket)
        occ = [0] * (M + 1)
        occ[k] = 1
        return bra.coeff(occ) / factor
    if method == "determinant":
        if len(set(a * a for a in u)) < N:
            raise DegeneratePoint("determinant route needs distinct u^2")
        return first_class_determinant(N, M, k, u, vr) / factor
    raise ValueError(f"unknown method {method!r}")


def omega_hat_u(s: int, M: int, u, v) -> Fraction:
    """1 / prod_{j<k}(v_j^2 - v_k^2) times (prod_{m<s} u_m prod_l v_l)^{-M}."""
    out = 1 / _vdm_sq(v)
    for a in u[: s - 1]:
        out /= a ** M
    for b in v:
        out /= b ** M
    return out


def second_class_coefficient(N: int, M: int, rs: Sequence[int], u, v, method: str = "determinant") -> Fraction:
    """<Psi(v)| B(u_1)..B(u_{N-p}) |n>, where |n> has occupations r_1 >= ... >= r_p.

    Determinant form valid for r_2, ..., r_p in {0, 1}.
    """
    rs = [int(r) for r in rs]
    p = len(rs)
    u, v = _vals(u), _vals(v)
    if not 1 <= p <= N or len(u) < N - p or len(v) != N:
        raise ValueError("bad sizes")
    if sorted(rs, reverse=True) != rs or not (0 <= rs[-1] and rs[0] <= M):
        raise ValueError("need M >= r_1 >= ... >= r_p >= 0")
    u = u[: N - p]
    if method == "bruteforce":
        occ = [0] * (M + 1)
        for r in rs:
            occ[r] += 1
        ket = apply_string([("B", a) for a in u], PhaseState.basis(M, occ))
        return apply_string([("C", b) for b in v], ket).vacuum_coeff()
    if method != "determinant":
        raise ValueError(f"unknown method {method!r}")
    if any(r > 1 for r in rs[1:]):
        raise ValueError("determinant form needs r_2, ..., r_p in {0, 1}")
    U = [a * a for a in u]
    V = [b * b for b in v]
    if len(set(V)) < N:
        raise DegeneratePoint("determinant route needs distinct v^2")
    cols = []
    for k in range(1, N - p + 1):
        cols.append([complete(M + N - k, U[:k] + [V[j]]) for j in range(N)])
    # rho^{N-p, j}_{gamma} = h_{M - gamma}(u_1^2..u_{N-p}^2, v_j^2), gamma = r_{p+1-i} + i - p
    for i in range(1, p + 1):
        gamma = rs[p - i] + i - p
        cols.append([complete(M - gamma, U + [V[j]]) for j in range(N)])
    mat = [[cols[c][j] for c in range(N)] for j in range(N)]
    return omega_hat_u(N + 1 - p, M, u, v) * det_exact(mat)


def correlation_second_class(N: int, M: int, p: int, u, v, method: str = "skew") -> Fraction:
    """sum over lam in {(M)^{N-p}, 1^p}, lam >= (1^p) of S_{lam/(1^p)}(u^2) S_lam(v^{-2}).

    ``bruteforce`` and ``determinant`` compute <0| C(v_1)..C(v_N) B(u_1)..B(u_{N-p}) (phi_1^+)^p |0>
    and multiply by its explicit factor (prod u_j / prod v_j)^M.
    """
    u, v = _vals(u), _vals(v)
    if len(u) != N - p or len(v) != N:
        raise ValueError("need N-p u's and N v's")
    if not 1 <= p <= N:
        raise ValueError("need 1 <= p <= N")
    _nonzero(u, v)
    factor = Fraction(1)
    for a in u:
        factor *= a ** M
    for b in v:
        factor /= b ** M
    if method == "skew":
        U = [a * a for a in u]
        Vi = [1 / (b * b) for b in v]
        ones = Partition((1,) * p)
        return sum((skew_schur_eval(lam, ones, U) * schur_eval(lam, Vi)
                    for lam in _second_class_box(N, M, p)), Fraction(0))
    if method in ("bruteforce", "determinant"):
        return factor * second_class_coefficient(N, M, [1] * p, u, v, method)
    raise ValueError(f"unknown method {method!r}")


def schur_state_coefficients(N: int, M: int, u) -> Dict[Tuple[int, ...], Tuple[Fraction, Fraction]]:
    """For each occupation: (brute-force coefficient, (prod u)^{-M} S_lam(u^2))."""
    u = _vals(u)
    ket = state_vector(M, u)
    pref = Fraction(1)
    for a in u:
        pref /= a ** M
    U = [a * a for a in u]
    out = {}
    for lam in partitions_in_box(N, M):
        occ = [0] * (M + 1)
        occ[0] = N - len(lam)
        for part in lam.parts:
            occ[part] += 1
        occ = tuple(occ)
        assert occupation_to_partition(occ) == lam
        out[occ] = (ket.coeff(occ), pref * schur_eval(lam, U))
    extra = set(ket.terms) - set(out)
    for occ in extra:
        out[occ] = (ket.coeff(occ), Fraction(0))
    return out
