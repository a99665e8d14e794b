"""Banded lower Hessenberg operators and their resolvent series.

Three operators are modelled, all with ones on the superdiagonal and
``p + 1`` diagonals below it. Column ``i`` holds the entry ``h_{i+k, i}``
on diagonal ``k``:

* ``forward(q)``:    ``a_{i+q}^(k)``      (the matrix H with q rows/columns removed)
* ``reflected(q)``:  ``a_{-k-q-i}^(k)``
* ``two_sided``:     ``a_i^(k)`` for every integer ``i``
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, NamedTuple

from .algebra import CoeffTable
from .series import LaurentSeries, Polynomial, ValidityError


class OperatorKind(NamedTuple):
    tag: str
    q: int = 0

    def validate(self) -> "OperatorKind":
        if self.tag not in ("forward", "reflected", "two_sided"):
            raise ValueError(f"unknown operator kind {self.tag!r}")
        if self.q < 0:
            raise ValueError("operator shift must be nonnegative")
        if self.tag == "two_sided" and self.q:
            raise ValueError("the two-sided operator takes no shift")
        return self


def forward(q: int = 0) -> OperatorKind:
    return OperatorKind("forward", q)


def reflected(q: int = 0) -> OperatorKind:
    return OperatorKind("reflected", q)


TWO_SIDED = OperatorKind("two_sided")


def entry(kind: OperatorKind, k: int, i: int, table: CoeffTable):
    """Matrix entry on diagonal ``k`` in column ``i`` (row ``i + k``)."""
    if kind.tag == "forward":
        return table.value(k, i + kind.q)
    if kind.tag == "reflected":
        return table.value(k, -k - kind.q - i)
    return table.value(k, i)


def _moment_sequence(kind: OperatorKind, j: int, count: int, table: CoeffTable) -> list:
    """``<M^n e_j, e_0>`` for ``0 <= n < count``.

    Components that can no longer return to index 0 within the remaining
    applications are dropped, so the working vector never leaves
    ``[-p*r, r]`` where ``r`` is the number of applications left.
    """
    kind.validate()
    p = table.p
    if not 0 <= j <= p:
        raise ValueError(f"j={j} outside [0, {p}]")
    ring = table.ring
    one_sided = kind.tag != "two_sided"
    vec: Dict[int, object] = {j: ring.one()}
    out = []
    for t in range(count):
        out.append(vec.get(0, ring.zero()))
        remaining = count - 1 - t - 1
        if remaining < 0:
            break
        nxt: Dict[int, object] = {}
        for i, x in vec.items():
            if i - 1 >= -p * remaining and i - 1 <= remaining and not (one_sided and i == 0):
                nxt[i - 1] = nxt.get(i - 1, ring.zero()) + x
            for k in range(p + 1):
                r = i + k
                if r > remaining or r < -p * remaining:
                    continue
                h = entry(kind, k, i, table)
                if h:
                    nxt[r] = nxt.get(r, ring.zero()) + h * x
        vec = {i: x for i, x in nxt.items() if x}
    return out


def moment(kind: OperatorKind, n: int, j: int, table: CoeffTable):
    """``<M^n e_j, e_0>`` by repeated banded matrix-vector products."""
    if n < 0:
        raise ValueError("moment order must be nonnegative")
    return _moment_sequence(kind, j, n + 1, table)[n]


def resolvent_series(kind: OperatorKind, j: int, N: int, table: CoeffTable) -> LaurentSeries:
    """``sum_{n<N} <M^n e_j, e_0> z^(-n-1)``, valid through ``z^(-N)``."""
    seq = _moment_sequence(kind, j, N, table)
    return LaurentSeries.from_coeffs(table.ring, {n + 1: c for n, c in enumerate(seq)}, 1, N)


# truncations and characteristic polynomials ---------------------------------

def truncation(kind: OperatorKind, n: int, table: CoeffTable) -> List[List[object]]:
    """Dense ``n x n`` principal truncation (rows/columns indexed from 0)."""
    kind.validate()
    zero, one = table.ring.zero(), table.ring.one()
    m = [[zero] * n for _ in range(n)]
    for c in range(n):
        if c >= 1:
            m[c - 1][c] = one
        for k in range(table.p + 1):
            if c + k < n:
                m[c + k][c] = entry(kind, k, c, table)
    return m


def _char_sequence(shift: int, size: int, table: CoeffTable) -> List[Polynomial]:
    """``det(z I_m - H^(shift)_m)`` for ``m = 0..size`` via the banded recurrence

    ``y_{m+1} = (z - a_{m+s}^(0)) y_m - sum_{k=1}^{p} a_{m-k+s}^(k) y_{m-k}``.
    """
    ring = table.ring
    z = Polynomial.z(ring)
    ys = [Polynomial.constant(ring, ring.one())]
    for m in range(size):
        nxt = (z - table.value(0, m + shift)) * ys[m]
        for k in range(1, table.p + 1):
            if m - k >= 0:
                a = table.value(k, m - k + shift)
                if a:
                    nxt = nxt - ys[m - k] * a
        ys.append(nxt)
    return ys


@dataclass(frozen=True)
class CharPolyPair:
    n: int
    q_n: Polynomial
    q_nk: Dict[int, Polynomial]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q_n": self.q_n.to_json(),
            "q_nk": {str(k): v.to_json() for k, v in sorted(self.q_nk.items())},
        }


def char_polys(n: int, table: CoeffTable) -> CharPolyPair:
    """``q_n = det(zI - H_n)`` and ``q_{n,k} = det(zI - H_n^[k])``, ``1 <= k <= p``.

    ``q_{n,k}`` is 1 when ``n == k`` (empty determinant) and 0 when ``n < k``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    ring = table.ring
    q_n = _char_sequence(0, n, table)[n]
    q_nk = {}
    for k in range(1, table.p + 1):
        if n < k:
            q_nk[k] = Polynomial(ring, [])
        else:
            q_nk[k] = _char_sequence(k, n - k, table)[n - k]
    return CharPolyPair(n, q_n, q_nk)


def determinant(matrix: List[List[Polynomial]]) -> Polynomial:
    """Division-free cofactor expansion along the first row."""
    n = len(matrix)
    if n == 0:
        raise ValueError("use the empty-determinant convention explicitly")
    ring = matrix[0][0].ring
    memo: Dict[tuple, Polynomial] = {}

    def minor(row: int, cols: tuple) -> Polynomial:
        if row == n:
            return Polynomial.constant(ring, ring.one())
        hit = memo.get((row, cols))
        if hit is not None:
            return hit
        total = Polynomial(ring, [])
        for idx, c in enumerate(cols):
            x = matrix[row][c]
            if not x.coeffs:
                continue
            term = x * minor(row + 1, cols[:idx] + cols[idx + 1:])
            total = total - term if idx % 2 else total + term
        memo[(row, cols)] = total
        return total

    return minor(0, tuple(range(n)))


def char_poly_by_determinant(n: int, table: CoeffTable, drop: int = 0) -> Polynomial:
    """``det(z I - H_n^[drop])`` from the dense truncation (oracle for :func:`char_polys`)."""
    ring = table.ring
    size = n - drop
    if size <= 0:
        return Polynomial.constant(ring, ring.one()) if size == 0 else Polynomial(ring, [])
    h = truncation(forward(0), n, table)
    z = Polynomial.z(ring)
    mat = [
        [
            (z if r == c else Polynomial(ring, [])) - h[r + drop][c + drop]
            for c in range(size)
        ]
        for r in range(size)
    ]
    return determinant(mat)


# Hermite-Pade order -------------------------------------------------------------

def hp_defect(n: int, k: int, N: int, table: CoeffTable) -> LaurentSeries:
    """``q_n * phi_k - q_{n,k+1}`` with ``phi_k`` known through ``z^(-N)``."""
    if not 0 <= k <= table.p - 1:
        raise ValueError(f"k={k} outside [0, {table.p - 1}]")
    pair = char_polys(n, table)
    phi = resolvent_series(forward(0), k, N, table)
    return pair.q_n.to_series() * phi - pair.q_nk[k + 1].to_series()


def hp_defect_order(n: int, k: int, N: int, table: CoeffTable) -> int:
    """Exponent of the first nonzero coefficient of ``q_n phi_k - q_{n,k+1}``.

    Approximation theory predicts at least ``floor((n-k)/p) + 1``. When every
    trusted coefficient vanishes the result is ``valid_to + 1``, a lower bound.
    """
    defect = hp_defect(n, k, N, table)
    target = (n - k) // table.p + 1
    if defect.valid_to < target:
        raise ValidityError(
            f"defect known only through z^(-{defect.valid_to}); need z^(-{target}), raise N"
        )
    if defect.coeffs:
        return defect.min_exp
    return defect.valid_to + 1
