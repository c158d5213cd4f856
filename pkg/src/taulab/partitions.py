"""Partition combinatorics: conjugation, hook coordinates, boxes, tableaux and
the occupation-number dictionary of the phase model."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing shape, stored without trailing zeros."""

    parts: Tuple[int, ...] = ()

    def __init__(self, parts: Sequence[int] = ()):
        ps = [int(p) for p in parts]
        if any(p < 0 for p in ps):
            raise ValueError("negative part")
        if any(ps[i] < ps[i + 1] for i in range(len(ps) - 1)):
            raise ValueError(f"parts not weakly decreasing: {ps}")
        while ps and ps[-1] == 0:
            ps.pop()
        object.__setattr__(self, "parts", tuple(ps))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """Part ``i`` (0-based), zero past the length."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self, n: int) -> Tuple[int, ...]:
        if len(self.parts) > n:
            raise ValueError("partition longer than requested padding")
        return self.parts + (0,) * (n - len(self.parts))

    def boxes(self) -> Iterator[Tuple[int, int]]:
        for i, row in enumerate(self.parts):
            for j in range(row):
                yield (i, j)

    def contains(self, mu: "Partition") -> bool:
        return len(mu) <= len(self) and all(mu[i] <= self[i] for i in range(len(mu)))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self):
        return f"Partition{self.parts}"


def conjugate(lam: Partition) -> Partition:
    if not lam.parts:
        return Partition(())
    return Partition([sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])])


# hook coordinates ---------------------------------------------------------


@dataclass(frozen=True)
class HookCoordinates:
    """Pairs ``(k_i, j_i)`` with ``k_i = lam_i - i`` and ``-j_i = lam'_i - i + 1``
    (1-based i).  ``k`` strictly decreasing, ``j`` strictly increasing and negative."""

    pairs: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        ks = [k for k, _ in self.pairs]
        js = [j for _, j in self.pairs]
        if any(k < 0 for k in ks) or any(j >= 0 for j in js):
            raise ValueError("need k >= 0 and j < 0")
        if any(ks[i] <= ks[i + 1] for i in range(len(ks) - 1)):
            raise ValueError("k must be strictly decreasing")
        if any(js[i] >= js[i + 1] for i in range(len(js) - 1)):
            raise ValueError("j must be strictly increasing")

    @property
    def ks(self) -> Tuple[int, ...]:
        return tuple(k for k, _ in self.pairs)

    @property
    def js(self) -> Tuple[int, ...]:
        return tuple(j for _, j in self.pairs)


def hook_coordinates(lam: Partition) -> HookCoordinates:
    lc = conjugate(lam)
    d = sum(1 for i, p in enumerate(lam.parts) if p > i)
    return HookCoordinates(tuple((lam[i] - i - 1, -(lc[i] - i)) for i in range(d)))


def partition_from_hooks(h: HookCoordinates) -> Partition:
    d = len(h.pairs)
    if d == 0:
        return Partition(())
    arms = [k for k, _ in h.pairs]
    legs = [-j - 1 for _, j in h.pairs]
    rows = [arms[i] + i + 1 for i in range(d)]
    # rows below the diagonal block are read off the legs
    length = legs[0] + 1
    for r in range(d, length):
        rows.append(sum(1 for i in range(d) if legs[i] + i >= r))
    return Partition(rows)


# boxes and tableaux -------------------------------------------------------


def partitions_in_box(rows: int, cols: int) -> List[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``."""
    out: List[Partition] = []

    def rec(prefix: List[int], bound: int):
        if len(prefix) == rows:
            out.append(Partition(prefix))
            return
        for p in range(bound, -1, -1):
            prefix.append(p)
            rec(prefix, p)
            prefix.pop()

    rec([], cols)
    out.sort(key=lambda p: (p.size, p.parts))
    return out


def partitions_of_size_at_most(d: int, max_len: int | None = None) -> List[Partition]:
    out: List[Partition] = []

    def rec(prefix, remaining, bound):
        out.append(Partition(prefix))
        if max_len is not None and len(prefix) >= max_len:
            return
        for p in range(min(bound, remaining), 0, -1):
            rec(prefix + [p], remaining - p, p)

    rec([], d, d)
    out.sort(key=lambda p: (p.size, p.parts))
    return out


def ssyt_weights(shape, max_entry: int, descending: bool = False) -> List[Tuple[int, ...]]:
    """Weight vectors of all column-strict fillings of ``shape`` (a Partition or a
    skew pair ``(lam, mu)``) with entries 1..max_entry.

    Ascending fillings increase weakly along rows and strictly down columns;
    ``descending=True`` reverses both orders.
    """
    if isinstance(shape, tuple) and len(shape) == 2 and isinstance(shape[0], Partition):
        lam, mu = shape
    else:
        lam, mu = shape, Partition(())
    if not lam.contains(mu):
        return []
    cells = [(i, j) for i in range(len(lam)) for j in range(mu[i], lam[i])]
    fill = {}
    out: List[Tuple[int, ...]] = []
    n = max_entry

    def ok(i, j, v):
        left = fill.get((i, j - 1))
        up = fill.get((i - 1, j))
        if descending:
            return (left is None or v <= left) and (up is None or v < up)
        return (left is None or v >= left) and (up is None or v > up)

    def rec(idx):
        if idx == len(cells):
            w = [0] * n
            for v in fill.values():
                w[v - 1] += 1
            out.append(tuple(w))
            return
        i, j = cells[idx]
        for v in range(1, n + 1):
            if ok(i, j, v):
                fill[(i, j)] = v
                rec(idx + 1)
                del fill[(i, j)]

    rec(0)
    return out


def horizontal_strips(lam: Partition, r: int, max_len: int | None = None) -> List[Partition]:
    """Partitions mu with mu/lam a horizontal strip of size r."""
    n = len(lam) + 1
    if max_len is not None:
        n = min(n, max_len)
    out = []

    def rec(i, prefix, remaining):
        if i == n:
            if remaining == 0:
                out.append(Partition(prefix))
            return
        upper = remaining + lam[i] if i == 0 else min(lam[i - 1], lam[i] + remaining)
        for m in range(lam[i], upper + 1):
            rec(i + 1, prefix + [m], remaining - (m - lam[i]))

    if len(lam) > n:
        return []
    rec(0, [], r)
    return out


# phase-model dictionary ---------------------------------------------------


def occupation_to_partition(n: Sequence[int]) -> Partition:
    """Occupations n_0..n_M map to the partition with n_l parts equal to l."""
    if any(x < 0 for x in n):
        raise ValueError("negative occupation")
    parts = []
    for l in range(len(n) - 1, 0, -1):
        parts.extend([l] * n[l])
    return Partition(parts)


def partition_to_occupation(lam: Partition, N: int, M: int) -> Tuple[int, ...]:
    if len(lam) > N or lam[0] > M:
        raise ValueError("partition does not fit in the box")
    occ = [0] * (M + 1)
    occ[0] = N - len(lam)
    for p in lam.parts:
        occ[p] += 1
    return tuple(occ)
