"""Lattice paths with steps rising by +1 or falling by 0..p units.

Six families are modelled, each selected by a :class:`FamilySpec`:

======  ==============================  =========================
family  endpoints                       constraint / step set
======  ==============================  =========================
P       (0, 0) -> (n, j)                none
D       (0, q) -> (n, j + q)            heights >= q
Dhat    (0, -j - q) -> (n, -q)          heights <= -q
R       (0, 0) -> (n, j)                steps +1 and -p only
S       (0, q) -> (n, j + q)            heights >= q, steps +1/-p
Shat    (0, -j - q) -> (n, -q)          heights <= -q, steps +1/-p
======  ==============================  =========================

A step of rise ``-i`` (``0 <= i <= p``) leaving height ``m`` weighs
``a_{m-i}^(i)``; upsteps weigh 1.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, List, NamedTuple, Tuple

from .algebra import CoeffTable, Var, WeightPoly, monomial_from_vars

FAMILIES = ("P", "D", "Dhat", "R", "S", "Shat")
_SHIFTABLE = {"D", "Dhat", "S", "Shat"}
_TWO_STEP = {"R", "S", "Shat"}


class FamilySpec(NamedTuple):
    family: str
    p: int
    n: int
    j: int
    q: int = 0

    def validate(self) -> "FamilySpec":
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.p < 1:
            raise ValueError("p must be at least 1")
        if self.n < 0:
            raise ValueError("path length must be nonnegative")
        if not 0 <= self.j <= self.p:
            raise ValueError(f"j={self.j} outside [0, {self.p}]")
        if self.q < 0:
            raise ValueError("shift q must be nonnegative")
        if self.q and self.family not in _SHIFTABLE:
            raise ValueError(f"family {self.family} takes no shift")
        return self

    @property
    def rises(self) -> Tuple[int, ...]:
        """Allowed rises in enumeration order."""
        if self.family in _TWO_STEP:
            return (1, -self.p)
        return tuple(range(1, -self.p - 1, -1))

    @property
    def start_height(self) -> int:
        if self.family in ("Dhat", "Shat"):
            return -self.j - self.q
        return self.q

    @property
    def end_height(self) -> int:
        if self.family in ("Dhat", "Shat"):
            return -self.q
        return self.j + self.q

    @property
    def floor(self):
        return self.q if self.family in ("D", "S") else None

    @property
    def ceiling(self):
        return -self.q if self.family in ("Dhat", "Shat") else None


@dataclass(frozen=True)
class LatticePath:
    start: Tuple[int, int]
    rises: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "start", tuple(self.start))
        object.__setattr__(self, "rises", tuple(self.rises))

    def __len__(self) -> int:
        return len(self.rises)

    def heights(self) -> List[int]:
        h = self.start[1]
        out = [h]
        for r in self.rises:
            h += r
            out.append(h)
        return out

    @property
    def end(self) -> Tuple[int, int]:
        return (self.start[0] + len(self.rises), self.start[1] + sum(self.rises))

    def max_height(self) -> int:
        return max(self.heights())

    def min_height(self) -> int:
        return min(self.heights())

    def shifted(self, q: int) -> "LatticePath":
        return LatticePath((self.start[0], self.start[1] + q), self.rises)

    # encodings ----------------------------------------------------------
    def encode(self) -> str:
        return "".join("U" if r == 1 else "L" if r == 0 else f"D{-r}" for r in self.rises)

    def to_json(self) -> dict:
        return {"start": list(self.start), "rises": list(self.rises)}

    @classmethod
    def from_json(cls, data: dict) -> "LatticePath":
        return cls(tuple(data["start"]), tuple(data["rises"]))

    @classmethod
    def decode(cls, text: str, start=(0, 0)) -> "LatticePath":
        tokens = re.findall(r"U|L|D\d+|\S", text.replace(" ", ""))
        rises = []
        for t in tokens:
            if t == "U":
                rises.append(1)
            elif t == "L":
                rises.append(0)
            elif t.startswith("D") and len(t) > 1:
                depth = int(t[1:])
                if depth < 1:
                    raise ValueError(f"bad downstep token {t!r}")
                rises.append(-depth)
            else:
                raise ValueError(f"bad path token {t!r}")
        return cls(tuple(start), tuple(rises))


# weights ----------------------------------------------------------------------

def step_weight(rise: int, height: int, table: CoeffTable):
    """Weight of a step of the given rise leaving ``height``."""
    if rise == 1:
        return table.ring.one()
    depth = -rise
    if not 0 <= depth <= table.p:
        raise ValueError(f"rise {rise} not allowed for p={table.p}")
    return table.value(depth, height - depth)


def _step_vars(start_height: int, rises) -> List[Var]:
    out = []
    h = start_height
    for r in rises:
        if r != 1:
            out.append(Var(-r, h + r))
        h += r
    return out


def path_weight(path: LatticePath, table: CoeffTable):
    w = table.ring.one()
    h = path.start[1]
    for r in path.rises:
        if r != 1:
            w = w * step_weight(r, h, table)
        h += r
    return w


# enumeration ------------------------------------------------------------------

def _walk(spec: FamilySpec) -> Iterator[List[int]]:
    """Depth-first generator of rise lists; the yielded list is reused."""
    steps = spec.rises
    p, n = spec.p, spec.n
    target = spec.end_height
    lo, hi = spec.floor, spec.ceiling
    if spec.family in _TWO_STEP and (n - spec.j) % (p + 1):
        return
    rises: List[int] = []

    def rec(h: int, remaining: int):
        if remaining == 0:
            if h == target:
                yield rises
            return
        for r in steps:
            nh = h + r
            if lo is not None and nh < lo:
                continue
            if hi is not None and nh > hi:
                continue
            rest = remaining - 1
            if target - nh > rest or nh - target > p * rest:
                continue
            rises.append(r)
            yield from rec(nh, rest)
            rises.pop()

    start = spec.start_height
    if (lo is not None and (start < lo or target < lo)) or (hi is not None and (start > hi or target > hi)):
        return
    yield from rec(start, n)


def enumerate_paths(spec: FamilySpec) -> Iterator[LatticePath]:
    """Stream the member paths of a family in depth-first order (+1, 0, -1, ..., -p)."""
    spec.validate()
    start = (0, spec.start_height)
    for rises in _walk(spec):
        yield LatticePath(start, tuple(rises))


@lru_cache(maxsize=4096)
def _symbolic_weight(spec: FamilySpec) -> WeightPoly:
    counts: Dict[tuple, int] = {}
    start = spec.start_height
    for rises in _walk(spec):
        m = monomial_from_vars(_step_vars(start, rises))
        counts[m] = counts.get(m, 0) + 1
    return WeightPoly(counts)


def weight_polynomial(spec: FamilySpec, table: CoeffTable):
    """Sum of path weights over the family; zero for an empty family."""
    spec.validate()
    if spec.p != table.p:
        raise ValueError("family and table disagree on p")
    if table.mode == "symbolic":
        poly = _symbolic_weight(spec)
        if table.zero_diagonals:
            dead = table.zero_diagonals
            poly = WeightPoly({m: c for m, c in poly.terms.items() if not any(v.k in dead for v, _ in m)})
        return poly
    total = table.ring.zero()
    for path in enumerate_paths(spec):
        total += path_weight(path, table)
    return total


# reflection -------------------------------------------------------------------

def reflect_hat(path: LatticePath) -> LatticePath:
    """Reflect a nonnegative path across the x-axis and then across x = n/2.

    The image of a path from (0, 0) to (n, j) staying at or above height 0
    runs from (0, -j) to (n, 0) at or below height 0; the rises come out in
    reverse order with their values unchanged.
    """
    if path.start != (0, 0):
        raise ValueError("reflect_hat expects a path starting at the origin")
    if path.min_height() < 0:
        raise ValueError("reflect_hat expects a path with no point below the axis")
    j = path.end[1]
    return LatticePath((0, -j), tuple(reversed(path.rises)))


def reflect_hat_inverse(path: LatticePath) -> LatticePath:
    if path.end[1] != 0 or path.start[0] != 0 or path.max_height() > 0:
        raise ValueError("expected a path ending at height 0 with no point above the axis")
    return LatticePath((0, 0), tuple(reversed(path.rises)))


# counting ---------------------------------------------------------------------

def fuss_catalan(p: int, m: int, j: int) -> int:
    """(j+1)/(pm+j+1) * C(m(p+1)+j, m)."""
    if p < 1 or m < 0 or not 0 <= j <= p:
        raise ValueError("fuss_catalan needs p >= 1, m >= 0 and 0 <= j <= p")
    top = (j + 1) * comb(m * (p + 1) + j, m)
    value, rem = divmod(top, p * m + j + 1)
    assert rem == 0
    return value


def _transfer_count(spec: FamilySpec) -> int:
    counts = {spec.start_height: 1}
    lo, hi = spec.floor, spec.ceiling
    for _ in range(spec.n):
        nxt: Dict[int, int] = {}
        for h, c in counts.items():
            for r in spec.rises:
                nh = h + r
                if (lo is not None and nh < lo) or (hi is not None and nh > hi):
                    continue
                nxt[nh] = nxt.get(nh, 0) + c
        counts = nxt
    return counts.get(spec.end_height, 0)


def count(spec: FamilySpec) -> int:
    """Number of paths in a family.

    R and S use the closed forms; the rest use a height-by-height transfer
    count rather than walking the paths.
    """
    spec.validate()
    if spec.family in ("R", "S"):
        m, rem = divmod(spec.n - spec.j, spec.p + 1)
        if rem or m < 0:
            return 0
        if spec.family == "R":
            return comb(m * (spec.p + 1) + spec.j, m)
        return fuss_catalan(spec.p, m, spec.j)
    return _transfer_count(spec)


# genetic sums -----------------------------------------------------------------

def genetic_sum(family: str, p: int, m: int, j: int, q: int = 0, table: CoeffTable = None):
    """Nested-sum closed form for R/S/T weight polynomials with ``a_i = a_i^(p)``.

    ``family`` is ``"R"``, ``"S"`` or ``"T"``. The result matches the weight
    polynomial of R_[n,j], S^(q)_[n,j] or T^(q)_[n,j] with ``n = m(p+1)+j``.
    """
    if family not in ("R", "S", "T"):
        raise ValueError("genetic sums exist for R, S and T")
    if p < 1 or m < 0 or not 0 <= j <= p or q < 0:
        raise ValueError("genetic_sum needs p >= 1, m >= 0, 0 <= j <= p, q >= 0")
    if family == "R" and q:
        raise ValueError("R takes no shift")
    table = table if table is not None else CoeffTable.symbolic(p)
    a = lambda i: table.value(p, i)
    one, zero = table.ring.one(), table.ring.zero()

    if family == "S":
        # i_1 in [q, j+q]; i_k in [q, i_{k-1} + p]
        @lru_cache(maxsize=None)
        def tail(level: int, upper: int):
            if level > m:
                return one
            total = zero
            for i in range(q, upper + 1):
                total += a(i) * tail(level + 1, i + p)
            return total

        return tail(1, j + q)

    if family == "T":
        # i_1 in [-j-p-q, -p-q]; i_k in [i_{k-1} - p, -p-q]
        @lru_cache(maxsize=None)
        def tail(level: int, lower: int):
            if level > m:
                return one
            total = zero
            for i in range(lower, -p - q + 1):
                total += a(i) * tail(level + 1, i - p)
            return total

        return tail(1, -j - p - q)

    # R: i_1 in [-p, (m-1)p + j]; i_k in [i_{k-1} - p, (m-k)p + j]
    @lru_cache(maxsize=None)
    def tail_r(level: int, lower: int):
        if level > m:
            return one
        total = zero
        for i in range(lower, (m - level) * p + j + 1):
            total += a(i) * tail_r(level + 1, i - p)
        return total

    return tail_r(1, -p)
