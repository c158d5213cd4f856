"""Exact arithmetic kernel: rationals, truncated Taylor jets, Laurent polynomials
and determinants.

Rationals are plain :class:`fractions.Fraction` values.  Everything here is
immutable and side-effect free.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _iproduct
from math import factorial
from typing import Callable, Dict, Iterable, List, Mapping, Sequence, Tuple

ExactScalar = Fraction

__all__ = [
    "ExactScalar",
    "Q",
    "Jet",
    "LaurentPoly",
    "ExactMatrix",
    "det_exact",
    "det_cofactor",
    "laurent_residue",
    "hirota_apply",
    "JetOrderError",
]


def Q(x, d=1) -> Fraction:
    """Shorthand constructor for an exact rational."""
    return Fraction(x, d)


class JetOrderError(ValueError):
    """A jet was not expanded far enough for the requested derivative."""


# --------------------------------------------------------------------- jets


class Jet:
    """Truncated multivariate Taylor expansion with rational coefficients.

    ``coeffs`` maps a multi-index ``(i_1, ..., i_k)`` to the Taylor coefficient
    of ``d_1^{i_1} ... d_k^{i_k}`` where ``d_j`` is the displacement of variable
    ``j`` from the expansion point.  Every index satisfies ``i_j <= orders[j]``.
    Zero coefficients are not stored.
    """

    __slots__ = ("variables", "orders", "coeffs")

    def __init__(self, variables: Sequence[str], orders: Sequence[int],
                 coeffs: Mapping[Tuple[int, ...], object] | None = None):
        self.variables = tuple(variables)
        self.orders = tuple(int(o) for o in orders)
        if len(self.variables) != len(self.orders):
            raise ValueError("variables and orders differ in length")
        clean: Dict[Tuple[int, ...], Fraction] = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != len(self.orders):
                raise ValueError("multi-index of wrong length")
            if any(i < 0 or i > o for i, o in zip(idx, self.orders)):
                continue
            c = Fraction(c)
            if c:
                clean[idx] = c
        self.coeffs = clean

    # constructors
    @classmethod
    def constant(cls, value, variables, orders) -> "Jet":
        return cls(variables, orders, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, name: str, value, variables, orders) -> "Jet":
        """The coordinate function ``name`` expanded about ``value``."""
        variables = tuple(variables)
        k = variables.index(name)
        zero = (0,) * len(variables)
        unit = tuple(1 if i == k else 0 for i in range(len(variables)))
        return cls(variables, orders, {zero: value, unit: 1})

    def like(self, value) -> "Jet":
        return Jet.constant(value, self.variables, self.orders)

    # accessors
    def const(self) -> Fraction:
        return self.coeffs.get((0,) * len(self.orders), Fraction(0))

    def coeff(self, idx: Sequence[int]) -> Fraction:
        idx = tuple(idx)
        if any(i > o for i, o in zip(idx, self.orders)):
            raise JetOrderError(f"index {idx} exceeds orders {self.orders}")
        return self.coeffs.get(idx, Fraction(0))

    def derivative(self, idx: Sequence[int]) -> Fraction:
        """Value of the mixed partial derivative at the expansion point."""
        w = 1
        for i in idx:
            w *= factorial(i)
        return self.coeff(idx) * w

    def _coerce(self, other) -> "Jet":
        if isinstance(other, Jet):
            if other.variables != self.variables or other.orders != self.orders:
                raise ValueError("incompatible jets")
            return other
        return self.like(other)

    # arithmetic
    def __add__(self, other):
        o = self._coerce(other)
        out = dict(self.coeffs)
        for k, v in o.coeffs.items():
            out[k] = out.get(k, 0) + v
        return Jet(self.variables, self.orders, out)

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.variables, self.orders, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Jet):
            c = Fraction(other)
            return Jet(self.variables, self.orders, {k: v * c for k, v in self.coeffs.items()})
        o = self._coerce(other)
        out: Dict[Tuple[int, ...], Fraction] = {}
        orders = self.orders
        for ka, va in self.coeffs.items():
            for kb, vb in o.coeffs.items():
                kk = tuple(a + b for a, b in zip(ka, kb))
                if any(x > m for x, m in zip(kk, orders)):
                    continue
                out[kk] = out.get(kk, 0) + va * vb
        return Jet(self.variables, self.orders, out)

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet":
        c0 = self.const()
        if c0 == 0:
            raise ZeroDivisionError("jet with vanishing constant term")
        # 1/(c0 (1 + e)) = (1/c0) sum (-e)^k, e nilpotent of order sum(orders)
        e = self * (1 / c0) - 1
        term = self.like(1)
        acc = self.like(1)
        for _ in range(sum(self.orders)):
            term = term * (-e)
            if not term.coeffs:
                break
            acc = acc + term
        return acc * (1 / c0)

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        return self * (1 / Fraction(other))

    def __rtruediv__(self, other):
        return self.reciprocal() * Fraction(other)

    def __pow__(self, n: int):
        if n < 0:
            return self.reciprocal() ** (-n)
        acc = self.like(1)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, Jet):
            return (self.variables, self.orders, self.coeffs) == (
                other.variables, other.orders, other.coeffs)
        try:
            return self.coeffs == self.like(other).coeffs
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.variables, self.orders, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Jet({self.variables}, {self.orders}, {self.coeffs})"


# ---------------------------------------------------------- Laurent polynomials


class LaurentPoly:
    """Finite Laurent polynomial in one variable with rational coefficients."""

    __slots__ = ("var", "terms")

    def __init__(self, terms: Mapping[int, object] | None = None, var: str = "lam"):
        self.var = var
        self.terms: Dict[int, Fraction] = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[int(e)] = self.terms.get(int(e), 0) + c
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def monomial(cls, exp: int, coeff=1, var="lam") -> "LaurentPoly":
        return cls({exp: coeff}, var)

    def coeff(self, e: int) -> Fraction:
        return self.terms.get(e, Fraction(0))

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly({0: other}, self.var)

    def __add__(self, other):
        o = self._coerce(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        out: Dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``var**k``."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()}, self.var)

    def invert_variable(self) -> "LaurentPoly":
        """Substitute ``var -> 1/var``."""
        return LaurentPoly({-e: c for e, c in self.terms.items()}, self.var)

    def __call__(self, value) -> Fraction:
        value = Fraction(value)
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * value ** e
        return total

    substitute = __call__

    def degree(self) -> int:
        return max(self.terms) if self.terms else -(10 ** 9)

    def low_degree(self) -> int:
        return min(self.terms) if self.terms else 10 ** 9

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        return self.terms == self._coerce(other).terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{self.var}^{e}" for e, c in sorted(self.terms.items()))


def laurent_residue(f: LaurentPoly) -> Fraction:
    """Coefficient of ``var**-1``."""
    return f.coeff(-1)


# ------------------------------------------------------------------ matrices


class ExactMatrix:
    """Row-major dense matrix over any exact ring (rationals, jets, ...)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.rows, self.cols, self.entries = rows, cols, entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int, one=Fraction(1), zero=Fraction(0)) -> "ExactMatrix":
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def build(cls, rows: int, cols: int, f: Callable[[int, int], object]) -> "ExactMatrix":
        return cls(rows, cols, [f(i, j) for i in range(rows) for j in range(cols)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> List[List]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(len(rows), len(cols), [self[i, j] for i in rows for j in cols])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix.build(self.cols, self.rows, lambda i, j: self[j, i])

    def map(self, f) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [f(x) for x in self.entries])

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return ExactMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [x * c for x in self.entries])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = 0
                for k in range(self.cols):
                    a = self[i, k]
                    if a == 0:
                        continue
                    b = other[k, j]
                    if b == 0:
                        continue
                    acc = a * b + acc
                out.append(acc if not isinstance(acc, int) else Fraction(acc))
        return ExactMatrix(self.rows, other.cols, out)

    def det(self):
        return det_exact(self)

    def __eq__(self, other):
        return (isinstance(other, ExactMatrix) and self.rows == other.rows
                and self.cols == other.cols
                and all(a == b for a, b in zip(self.entries, other.entries)))

    def __repr__(self):
        return f"ExactMatrix({self.to_rows()})"


def _as_rows(m) -> List[List]:
    if isinstance(m, ExactMatrix):
        if m.rows != m.cols:
            raise ValueError("determinant of a non-square matrix")
        return m.to_rows()
    rows = [list(r) for r in m]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("determinant of a non-square matrix")
    return rows


def _is_rational(x) -> bool:
    return isinstance(x, (int, Fraction))


def _bareiss(a: List[List[Fraction]]) -> Fraction:
    n = len(a)
    a = [[Fraction(x) for x in r] for r in a]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * piv - aik * row_k[j]) / prev
            row_i[k] = Fraction(0)
        prev = piv
    return sign * a[n - 1][n - 1]


def _laplace_memo(a: List[List]):
    """Division-free expansion along rows, memoised on the used column set."""
    n = len(a)
    memo: Dict[int, object] = {}

    def rec(row: int, used: int):
        if row == n:
            return 1
        if used in memo:
            return memo[used]
        total = 0
        sgn = 1
        for j in range(n):
            if used >> j & 1:
                continue
            x = a[row][j]
            if not (isinstance(x, (int, Fraction)) and x == 0):
                sub = rec(row + 1, used | (1 << j))
                term = x * sub
                total = term + total if sgn > 0 else total - term
            sgn = -sgn
        memo[used] = total
        return total

    return rec(0, 0)


def det_exact(m):
    """Exact determinant.  Rationals use fraction-free elimination; other ring
    elements (jets) use a division-free expansion.  The empty determinant is 1."""
    rows = _as_rows(m)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if all(_is_rational(x) for r in rows for x in r):
        return _bareiss(rows)
    res = _laplace_memo(rows)
    if isinstance(res, int):
        res = Fraction(res)
    return res


def det_cofactor(m):
    """Plain first-row cofactor expansion; kept as an oracle for tests."""
    rows = _as_rows(m)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


# ------------------------------------------------------------------- Hirota


def hirota_apply(monomial: Iterable[Tuple[str, int]], f: Jet, g: Jet) -> Fraction:
    """Value of ``prod_x D_x^{k_x} (f . g)`` at the jets' common point.

    Uses f(x+y) g(x-y) = exp(sum y_i D_i)(f.g): the coefficient of ``y^a`` on the
    left is ``sum_{b+c=a} f_b g_c (-1)^{|c|}`` in Taylor coefficients.
    """
    if f.variables != g.variables or f.orders != g.orders:
        raise ValueError("f and g must be jets over the same variables and orders")
    powers = [0] * len(f.variables)
    for name, k in monomial:
        powers[f.variables.index(name)] += int(k)
    if any(p > o for p, o in zip(powers, f.orders)):
        raise JetOrderError(f"Hirota monomial {powers} exceeds jet orders {f.orders}")
    total = Fraction(0)
    for b in _iproduct(*(range(p + 1) for p in powers)):
        c = tuple(p - x for p, x in zip(powers, b))
        fb = f.coeffs.get(b)
        if not fb:
            continue
        gc = g.coeffs.get(c)
        if not gc:
            continue
        term = fb * gc
        total += -term if sum(c) % 2 else term
    w = 1
    for p in powers:
        w *= factorial(p)
    return total * w
