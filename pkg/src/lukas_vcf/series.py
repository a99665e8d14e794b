"""Truncated Laurent series in ``1/z`` over an exact ring.

A :class:`LaurentSeries` stores the coefficients of ``z^(-e)`` for
``min_exp <= e <= valid_to``. Coefficients above ``valid_to`` are unknown,
not zero, and every operation propagates the range on which its result is
provably correct. Polynomials in ``z`` and other finite expansions are
*exact*: their ``valid_to`` is infinite.
"""
from __future__ import annotations

import math
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import CoeffTable, Ring, RingMismatchError, ring_of
from .paths import FamilySpec, weight_polynomial

INF = math.inf

FAMILY_TAGS = {"W": "P", "A": "D", "B": "Dhat", "R": "R", "S": "S", "T": "Shat"}


class ValidityError(ValueError):
    """A coefficient was requested outside the trusted range."""


def _is_zero(x) -> bool:
    return not x


class LaurentSeries:
    __slots__ = ("ring", "min_exp", "valid_to", "coeffs")

    def __init__(self, ring: Ring, min_exp: int, coeffs: Sequence, valid_to=None):
        self.ring = ring
        self.coeffs = [ring.check(c) for c in coeffs]
        if valid_to is None:
            valid_to = min_exp + len(self.coeffs) - 1
        if valid_to != INF and len(self.coeffs) != valid_to - min_exp + 1:
            raise ValueError("coefficient list does not cover [min_exp, valid_to]")
        self.min_exp = min_exp
        self.valid_to = valid_to
        self._normalize()

    # constructors -------------------------------------------------------
    @classmethod
    def _raw(cls, ring, min_exp, coeffs, valid_to) -> "LaurentSeries":
        obj = cls.__new__(cls)
        obj.ring, obj.min_exp, obj.coeffs, obj.valid_to = ring, min_exp, coeffs, valid_to
        obj._normalize()
        return obj

    @classmethod
    def exact(cls, ring: Ring, coeffs: Dict[int, object]) -> "LaurentSeries":
        """Finite series ``sum c_e z^(-e)``, exact at every order."""
        if not coeffs:
            return cls._raw(ring, 0, [], INF)
        lo, hi = min(coeffs), max(coeffs)
        return cls._raw(ring, lo, [ring.check(coeffs.get(e, 0)) for e in range(lo, hi + 1)], INF)

    @classmethod
    def from_coeffs(cls, ring: Ring, coeffs: Dict[int, object], min_exp: int, valid_to: int) -> "LaurentSeries":
        zero = ring.zero()
        return cls._raw(
            ring, min_exp, [ring.check(coeffs.get(e, zero)) for e in range(min_exp, valid_to + 1)], valid_to
        )

    @classmethod
    def big_o(cls, ring: Ring, min_exp: int) -> "LaurentSeries":
        """An unknown series known only to start at ``z^(-min_exp)``."""
        return cls._raw(ring, min_exp, [], min_exp - 1)

    @classmethod
    def constant(cls, ring: Ring, c) -> "LaurentSeries":
        return cls.exact(ring, {0: c})

    @classmethod
    def z_power(cls, ring: Ring, d: int) -> "LaurentSeries":
        return cls.exact(ring, {-d: ring.one()})

    def _normalize(self):
        c = self.coeffs
        k = 0
        while k < len(c) and _is_zero(c[k]):
            k += 1
        if k:
            del c[:k]
            self.min_exp += k
        if self.valid_to == INF:
            while c and _is_zero(c[-1]):
                c.pop()
            if not c:
                self.min_exp = 0

    # queries ------------------------------------------------------------
    @property
    def is_exact(self) -> bool:
        return self.valid_to == INF

    @property
    def is_zero(self) -> bool:
        return self.is_exact and not self.coeffs

    @property
    def last_stored(self) -> int:
        return self.min_exp + len(self.coeffs) - 1

    def coeff(self, e: int):
        if e < self.min_exp:
            return self.ring.zero()
        if e > self.valid_to:
            raise ValidityError(f"coefficient of z^({-e}) is beyond the trusted range (valid to {self.valid_to})")
        i = e - self.min_exp
        if i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero()

    def leading(self):
        if not self.coeffs:
            raise ValidityError("no known nonzero coefficient")
        return self.coeffs[0]

    def items(self, upto: Optional[int] = None):
        hi = self.last_stored if self.is_exact else self.valid_to
        if upto is not None:
            hi = min(hi, upto)
        for e in range(self.min_exp, hi + 1):
            yield e, self.coeff(e)

    def __repr__(self) -> str:
        return f"LaurentSeries(min_exp={self.min_exp}, valid_to={self.valid_to}, coeffs={[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        terms = []
        for e, c in self.items():
            if _is_zero(c):
                continue
            zpart = "" if e == 0 else ("z" if e == -1 else f"z^{-e}")
            terms.append(f"({c})*{zpart}" if zpart else f"({c})")
        tail = "" if self.is_exact else f" + O(z^{-(self.valid_to + 1)})"
        return (" + ".join(terms) or "0") + tail

    # arithmetic ---------------------------------------------------------
    def _check_ring(self, other: "LaurentSeries"):
        if other.ring is not self.ring:
            raise RingMismatchError("series over different rings")

    def _lift(self, other) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            self._check_ring(other)
            return other
        return LaurentSeries.constant(self.ring, self.ring.check(other))

    def __add__(self, other) -> "LaurentSeries":
        other = self._lift(other)
        lo = min(self.min_exp, other.min_exp)
        valid = min(self.valid_to, other.valid_to)
        hi = max(self.last_stored, other.last_stored) if valid == INF else valid
        out = [self.coeff(e) + other.coeff(e) for e in range(lo, hi + 1)]
        return LaurentSeries._raw(self.ring, lo, out, valid)

    __radd__ = __add__

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries._raw(self.ring, self.min_exp, [-c for c in self.coeffs], self.valid_to)

    def __sub__(self, other) -> "LaurentSeries":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "LaurentSeries":
        return self._lift(other) - self

    def scale(self, c) -> "LaurentSeries":
        c = self.ring.check(c)
        return LaurentSeries._raw(self.ring, self.min_exp, [c * x for x in self.coeffs], self.valid_to)

    def __mul__(self, other) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        self._check_ring(other)
        if self.is_zero or other.is_zero:
            return LaurentSeries.exact(self.ring, {})
        a, b = self, other
        lo = a.min_exp + b.min_exp
        valid = min(a.valid_to + b.min_exp, b.valid_to + a.min_exp)
        hi = a.last_stored + b.last_stored if valid == INF else valid
        ac, bc = a.coeffs, b.coeffs
        zero = self.ring.zero()
        out = []
        for e in range(lo, hi + 1):
            acc = zero
            # index i into ac, e - lo - i into bc
            s = e - lo
            i_lo = max(0, s - len(bc) + 1)
            i_hi = min(len(ac) - 1, s)
            for i in range(i_lo, i_hi + 1):
                x, y = ac[i], bc[s - i]
                if x and y:
                    acc = acc + x * y
            out.append(acc)
        return LaurentSeries._raw(self.ring, lo, out, valid)

    __rmul__ = __mul__

    def invert(self, N: Optional[int] = None) -> "LaurentSeries":
        """Multiplicative inverse, valid through ``z^(-N)`` when ``N`` is given.

        The leading coefficient must be a unit: +-1 in symbolic mode, any
        nonzero rational in numeric mode.
        """
        if self.is_zero:
            raise ZeroDivisionError("inverse of the zero series")
        if not self.coeffs:
            raise ValidityError("leading coefficient unknown; cannot invert")
        lead = self.coeffs[0]
        if not self.ring.is_unit(lead):
            raise ZeroDivisionError(f"leading coefficient {lead} is not a unit")
        m = self.min_exp
        valid = self.valid_to - 2 * m if not self.is_exact else INF
        if N is not None:
            valid = min(valid, N)
        if valid == INF:
            raise ValueError("inverting an exact series needs a target order N")
        inv_lead = self.ring.inverse(lead)
        count = valid + m + 1
        if count <= 0:
            return LaurentSeries.big_o(self.ring, -m)
        c = self.coeffs
        d = [inv_lead]
        zero = self.ring.zero()
        for k in range(1, count):
            acc = zero
            for i in range(1, min(k, len(c) - 1) + 1):
                x = c[i]
                if x:
                    acc = acc + x * d[k - i]
            d.append(-(acc * inv_lead) if acc else zero)
        return LaurentSeries._raw(self.ring, -m, d, valid)

    def truncate(self, valid_to: int) -> "LaurentSeries":
        if valid_to >= self.valid_to:
            return self
        keep = max(0, valid_to - self.min_exp + 1)
        zero = self.ring.zero()
        c = list(self.coeffs[:keep]) + [zero] * max(0, keep - len(self.coeffs))
        return LaurentSeries._raw(self.ring, self.min_exp, c, valid_to)

    def map(self, f, ring: Ring) -> "LaurentSeries":
        return LaurentSeries._raw(ring, self.min_exp, [f(c) for c in self.coeffs], self.valid_to)

    def specialize(self, table: CoeffTable) -> "LaurentSeries":
        return self.map(table.specialize, table.ring)

    def with_coeff(self, e: int, value) -> "LaurentSeries":
        """Copy with the coefficient of ``z^(-e)`` replaced (used for negative controls)."""
        if e > self.valid_to:
            raise ValidityError("cannot set a coefficient beyond the trusted range")
        lo = min(self.min_exp, e)
        hi = max(self.last_stored, e) if self.is_exact else self.valid_to
        out = [self.coeff(x) for x in range(lo, hi + 1)]
        out[e - lo] = self.ring.check(value)
        return LaurentSeries._raw(self.ring, lo, out, self.valid_to)

    # comparison ---------------------------------------------------------
    def common_range(self, other: "LaurentSeries") -> Tuple[int, object]:
        lo = min(self.min_exp, other.min_exp)
        hi = min(self.valid_to, other.valid_to)
        if hi == INF:
            hi = max(self.last_stored, other.last_stored)
        return lo, hi

    def mismatches(self, other: "LaurentSeries", upto: Optional[int] = None) -> List[Tuple[int, object, object]]:
        """Exponents in the common valid range where the coefficients differ."""
        self._check_ring(other)
        lo, hi = self.common_range(other)
        if upto is not None:
            if upto > hi:
                raise ValidityError(f"comparison up to {upto} exceeds the common valid range (to {hi})")
            hi = upto
        out = []
        for e in range(lo, hi + 1):
            x, y = self.coeff(e), other.coeff(e)
            if x != y:
                out.append((e, x, y))
        return out

    def agrees_with(self, other: "LaurentSeries", upto: Optional[int] = None) -> bool:
        return not self.mismatches(other, upto)

    # io -----------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "min_exp": self.min_exp,
            "valid_to": None if self.is_exact else self.valid_to,
            "coeffs": [[e, self.ring.to_json(c)] for e, c in self.items() if not _is_zero(c)],
        }

    @classmethod
    def from_json(cls, ring: Ring, data: dict) -> "LaurentSeries":
        coeffs = {int(e): ring.from_json(c) for e, c in data["coeffs"]}
        if data.get("valid_to") is None:
            return cls.exact(ring, coeffs)
        return cls.from_coeffs(ring, coeffs, int(data["min_exp"]), int(data["valid_to"]))


def series_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a + b


def series_sub(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a - b


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    return a * b


def series_invert(a: LaurentSeries, N: Optional[int] = None) -> LaurentSeries:
    return a.invert(N)


# polynomials in z -------------------------------------------------------------

class Polynomial:
    """Polynomial in ``z`` with ring coefficients, stored low degree first."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Sequence):
        self.ring = ring
        c = [ring.check(x) for x in coeffs]
        while c and _is_zero(c[-1]):
            c.pop()
        self.coeffs = c

    @classmethod
    def z(cls, ring: Ring) -> "Polynomial":
        return cls(ring, [ring.zero(), ring.one()])

    @classmethod
    def constant(cls, ring: Ring, c) -> "Polynomial":
        return cls(ring, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one()

    def coeff(self, d: int):
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else self.ring.zero()

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring is not self.ring:
                raise RingMismatchError("polynomials over different rings")
            return other
        return Polynomial(self.ring, [other])

    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.ring, [self.coeff(d) + other.coeff(d) for d in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._lift(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial(self.ring, [])
        out = [self.ring.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(other.coeffs):
                if y:
                    out[i + j] = out[i + j] + x * y
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def to_series(self) -> LaurentSeries:
        return LaurentSeries.exact(self.ring, {-d: c for d, c in enumerate(self.coeffs)})

    def to_json(self) -> list:
        return [self.ring.to_json(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if _is_zero(c):
                continue
            zpart = "" if d == 0 else ("z" if d == 1 else f"z^{d}")
            if zpart and c == self.ring.one():
                parts.append(zpart)
            else:
                parts.append(f"({c})" + (f"*{zpart}" if zpart else ""))
        return " + ".join(parts) or "0"


def rational_to_series(numer: Polynomial, denom: Polynomial, N: int) -> LaurentSeries:
    """Expansion of ``numer/denom`` at infinity, valid through ``z^(-N)``."""
    if not denom.coeffs:
        raise ZeroDivisionError("zero denominator")
    # the numerator's positive powers of z eat into the precision of the inverse
    return (numer.to_series() * denom.to_series().invert(N + max(0, numer.degree))).truncate(N)


# vector division ----------------------------------------------------------------

SeriesVector = Tuple[LaurentSeries, ...]


def _as_series(x, ring: Ring) -> LaurentSeries:
    if isinstance(x, LaurentSeries):
        return x
    if isinstance(x, Polynomial):
        return x.to_series()
    return LaurentSeries.constant(ring, x)


def vector_divide(f: Sequence, g: Sequence, N: Optional[int] = None) -> SeriesVector:
    """``(f_1/g_p, f_2 g_1/g_p, ..., f_p g_{p-1}/g_p)``.

    Entries may be series, polynomials in ``z`` or ring constants. ``N`` caps
    the precision of the inverse of ``g_p`` and is required when ``g_p`` is
    exact.
    """
    if len(f) != len(g) or not g:
        raise ValueError("vector division needs two vectors of the same positive length")
    ring = next(
        (x.ring for x in list(g) + list(f) if isinstance(x, (LaurentSeries, Polynomial))),
        None,
    ) or ring_of(g[-1])
    f = [_as_series(x, ring) for x in f]
    g = [_as_series(x, ring) for x in g]
    inv = g[-1].invert(N)
    out = [f[0] * inv]
    for i in range(1, len(f)):
        out.append(f[i] * g[i - 1] * inv)
    if N is not None:
        out = [s.truncate(N) for s in out]
    return tuple(out)


# family series ------------------------------------------------------------------

def series_from_family(tag: str, j: int, q: int, N: int, table: CoeffTable) -> LaurentSeries:
    """``sum_{n=0}^{N-1} F_[n,j] z^(-n-1)`` for the family named by ``tag``.

    ``tag`` is one of W, A, B (general paths) or R, S, T (steps +1 and -p).
    The result is valid through ``z^(-N)``.
    """
    if tag not in FAMILY_TAGS:
        raise ValueError(f"unknown family tag {tag!r}")
    family = FAMILY_TAGS[tag]
    coeffs = {
        n + 1: weight_polynomial(FamilySpec(family, table.p, n, j, q), table)
        for n in range(N)
    }
    return LaurentSeries.from_coeffs(table.ring, coeffs, 1, N)
