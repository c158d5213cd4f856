"""Charge-zero free fermions on the hook basis.

Conventions: ``psi_i`` creates mode ``i`` and ``psi*_i`` removes it; the vacuum
fills every negative mode.  So ``psi*_j`` with ``j < 0`` and ``psi_k`` with
``k >= 0`` are the excitations, and a basis vector

    psi*_{j_1} ... psi*_{j_r} psi_{k_r} ... psi_{k_1} |0>,   j_1 < ... < j_r < 0 <= k_r < ... < k_1

is keyed by the pairs ``(k_i, j_i)`` of :class:`HookCoordinates`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .exact_core import Jet, det_exact
from .partitions import HookCoordinates, Partition, partition_from_hooks
from .sympoly import TimeVector, character_poly

PSI = "psi"
PSI_STAR = "psi*"

Factor = Tuple[str, int]


# ------------------------------------------------------------------- Wick

def two_point(a: Factor, b: Factor) -> int:
    (ka, i), (kb, j) = a, b
    if i != j:
        return 0
    if ka == PSI and kb == PSI_STAR:
        return 1 if i < 0 else 0
    if ka == PSI_STAR and kb == PSI:
        return 1 if i >= 0 else 0
    return 0


def wick_expectation(factors: Sequence[Factor]) -> Fraction:
    """<0| f_1 ... f_n |0> as the signed sum over perfect pairings."""
    factors = tuple((k, int(m)) for k, m in factors)
    for k, _ in factors:
        if k not in (PSI, PSI_STAR):
            raise ValueError(f"unknown fermion kind {k!r}")
    return Fraction(_wick(factors))


@lru_cache(maxsize=None)
def _wick(fs: Tuple[Factor, ...]) -> int:
    n = len(fs)
    if n == 0:
        return 1
    if n % 2:
        return 0
    total = 0
    for m in range(1, n):
        c = two_point(fs[0], fs[m])
        if c:
            sign = -1 if (m - 1) % 2 else 1
            total += sign * c * _wick(fs[1:m] + fs[m + 1:])
    return total


def normal_order_expectation(factors: Sequence[Factor]) -> Fraction:
    """Oracle: act with the operators on the Dirac sea one at a time.

    A state is the pair (holes below 0, particles at or above 0); the sign of
    touching mode ``i`` is (-1) to the number of occupied modes above ``i``.
    """
    state = (frozenset(), frozenset())
    coeff = 1
    for kind, i in reversed(list(factors)):
        holes, parts = state
        occupied = (i < 0 and i not in holes) or (i >= 0 and i in parts)
        above = sum(1 for p in parts if p > i)
        if i < 0:
            above += (-1 - i) - sum(1 for h in holes if h > i)
        if kind == PSI:
            if occupied:
                return Fraction(0)
            state = (holes - {i}, parts | {i}) if i >= 0 else (holes - {i}, parts)
        else:
            if not occupied:
                return Fraction(0)
            state = (holes | {i}, parts) if i < 0 else (holes, parts - {i})
        if above % 2:
            coeff = -coeff
    return Fraction(coeff) if state == (frozenset(), frozenset()) else Fraction(0)


# ------------------------------------------------------------- Fock space

@dataclass(frozen=True)
class FockVector:
    terms: Mapping[HookCoordinates, Fraction]

    def __init__(self, terms: Mapping[HookCoordinates, object] | None = None):
        clean = {k: Fraction(v) for k, v in (terms or {}).items() if v != 0}
        object.__setattr__(self, "terms", clean)

    @classmethod
    def vacuum(cls) -> "FockVector":
        return cls({HookCoordinates(()): 1})

    @classmethod
    def basis(cls, pairs: Iterable[Tuple[int, int]], coeff=1) -> "FockVector":
        return cls({HookCoordinates(tuple(pairs)): coeff})

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return FockVector(out)

    def scale(self, c) -> "FockVector":
        return FockVector({k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FockVector) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)


def _word(h: HookCoordinates) -> List[Factor]:
    stars = [(PSI_STAR, j) for j in h.js]
    psis = [(PSI, k) for k in reversed(h.ks)]
    return stars + psis


def _canonical(word: List[Factor]):
    """Sort a word of anticommuting excitations; None if a mode repeats."""
    if len(set(word)) != len(word):
        return None, 0
    key = [(0 if k == PSI_STAR else 1, m) for k, m in word]
    inv = sum(1 for a in range(len(key)) for b in range(a + 1, len(key)) if key[a] > key[b])
    js = sorted(m for k, m in word if k == PSI_STAR)
    ks = sorted((m for k, m in word if k == PSI), reverse=True)
    return HookCoordinates(tuple(zip(ks, js))), (-1 if inv % 2 else 1)


def clifford_apply(a: int, l: int, coeff, v: FockVector) -> FockVector:
    """coeff * psi*_{-a} psi_l applied to ``v``."""
    if a <= 0 or l < 0:
        raise ValueError("need a > 0 and l >= 0")
    out: Dict[HookCoordinates, Fraction] = {}
    head = [(PSI_STAR, -a), (PSI, l)]
    for key, c in v.terms.items():
        new, sign = _canonical(head + _word(key))
        if new is None:
            continue
        out[new] = out.get(new, Fraction(0)) + sign * Fraction(coeff) * c
    return FockVector(out)


def hook_sign(h: HookCoordinates) -> int:
    return -1 if sum(h.js) % 2 else 1


def bosonize(v: FockVector, x) -> Fraction:
    """sum coeff * (-1)^{j_1+...+j_r} chi_lam(x)."""
    x = x if isinstance(x, TimeVector) else TimeVector(x)
    total = Fraction(0)
    for key, c in v.terms.items():
        total += c * hook_sign(key) * character_poly(partition_from_hooks(key), x)
    return total


# ------------------------------------------------------- master coefficients

@dataclass(frozen=True)
class MasterCoefficients:
    """Column vectors gamma_mu = row mu of a master matrix; c_lam = |gamma_{lam_N}, ..., gamma_{lam_1+N-1}|."""

    name: str
    rows: Tuple[Tuple[Fraction, ...], ...]

    def __init__(self, name: str, master: Sequence[Sequence]):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "rows", tuple(tuple(Fraction(a) for a in r) for r in master))

    @property
    def width(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def gamma(self, mu: int) -> Tuple[Fraction, ...]:
        if 0 <= mu < len(self.rows):
            return self.rows[mu]
        return (Fraction(0),) * self.width

    def minor(self, indices: Sequence[int]) -> Fraction:
        """|gamma_{i_1}, ..., gamma_{i_N}| with the gammas as columns."""
        return det_exact([list(self.gamma(i)) for i in indices])

    def __call__(self, lam) -> Fraction:
        lam = lam if isinstance(lam, Partition) else Partition(lam)
        N = self.width
        if len(lam) > N:
            return Fraction(0)
        parts = lam.padded(N)
        return self.minor([parts[N - i] + i - 1 for i in range(1, N + 1)])

    def normalized(self, lam) -> Fraction:
        empty = self(Partition(()))
        if empty == 0:
            raise ZeroDivisionError("vanishing c_empty")
        return self(lam) / empty


def hook_partition(arm: int, leg: int) -> Partition:
    """(arm+1, 1^leg)."""
    return Partition((arm + 1,) + (1,) * leg)


def generator(coeffs: MasterCoefficients, l: int, depth: int) -> List[Tuple[int, int, Fraction]]:
    """Terms (a, l, coeff) of X_l = sum_j (-1)^j c~_{(l+1, 1^{j-1})} psi*_{-j} psi_l."""
    return [(j, l, (-1) ** j * coeffs.normalized(hook_partition(l, j - 1)))
            for j in range(1, depth + 1)]


def generator_product(coeffs: MasterCoefficients, generator_count: int, hook_depth: int) -> FockVector:
    """exp(X_0) ... exp(X_{G-1}) |0>; each exponential is 1 + X since X_l^2 = 0."""
    v = FockVector.vacuum()
    for l in range(generator_count - 1, -1, -1):
        acc = v
        for a, ll, c in generator(coeffs, l, hook_depth):
            if c:
                acc = acc + clifford_apply(a, ll, c, v)
        v = acc
    return v


def plucker_collapse_mismatches(coeffs: MasterCoefficients, v: FockVector) -> List[Partition]:
    """Partitions whose signed generator-product coefficient is not c~_lam."""
    bad = []
    for key, c in v.terms.items():
        lam = partition_from_hooks(key)
        if c * hook_sign(key) != coeffs.normalized(lam):
            bad.append(lam)
    return bad


def plucker_residual(coeffs: MasterCoefficients, mus: Sequence[int], nus: Sequence[int]) -> Fraction:
    """sum_p (-1)^{p+1} |gamma_nu without nu_p| |gamma_mu, gamma_{nu_p}|  (N-1 mus, N+1 nus)."""
    N = coeffs.width
    if len(mus) != N - 1 or len(nus) != N + 1:
        raise ValueError("need N-1 mus and N+1 nus")
    total = Fraction(0)
    for p in range(N + 1):
        rest = list(nus[:p]) + list(nus[p + 1:])
        term = coeffs.minor(rest) * coeffs.minor(list(mus) + [nus[p]])
        total += term if p % 2 == 0 else -term
    return total


# -------------------------------------------------------- Cauchy via Wick

def cauchy_wick_sides(k: Sequence, l: Sequence, order: int, dual: bool = False) -> Tuple[Jet, Jet]:
    """Both sides of the Cauchy-determinant evaluation as jets in z, with l -> z l.

    ``dual=False``: <psi(k_1)..psi(k_p) psi*(l_1)..psi*(l_p)>, psi(k)=sum psi_i k^i,
    psi*(l) = sum psi*_i l^{-i}; closed form prod l_i prod_{i<j}(k_i-k_j)(l_j-l_i) / prod_{i,j}(k_i-l_j).
    ``dual=True`` swaps the roles and the prefactor becomes prod k_i.
    Moving each psi* next to its partner costs (-1)^{p(p-1)/2}, which the
    closed form carries explicitly.
    The left side sums Wick expectations of single-mode strings through z^order.
    """
    k = [Fraction(a) for a in k]
    l = [Fraction(a) for a in l]
    p = len(k)
    if len(l) != p:
        raise ValueError("k and l differ in length")
    z = Jet.variable("z", 0, ["z"], [order])
    one = z.like(1)

    # each psi*(z l) mode contributes z^{|mode|} (or z^{mode} in the dual case)
    lo = 0 if dual else 1
    lhs = z.like(0)
    for ms in itertools.product(range(lo, order + 1), repeat=p):
        if sum(ms) > order:
            continue
        for ns in set(itertools.permutations(ms)):
            if dual:
                facs = [(PSI_STAR, n) for n in ns] + [(PSI, m) for m in ms]
            else:
                facs = [(PSI, -n) for n in ns] + [(PSI_STAR, -m) for m in ms]
            val = wick_expectation(facs)
            if not val:
                continue
            term = one * val
            for i in range(p):
                term = term * (l[i] ** ms[i] / k[i] ** ns[i])
            lhs = lhs + term * z ** sum(ms)
    zl = [z * a for a in l]
    rhs = one * (-1 if (p * (p - 1) // 2) % 2 else 1)
    for i in range(p):
        rhs = rhs * (k[i] if dual else zl[i])
        for j in range(i + 1, p):
            rhs = rhs * (k[i] - k[j]) * (zl[j] - zl[i])
        for j in range(p):
            rhs = rhs / (zl[j] * -1 + k[i])
    return lhs, rhs
