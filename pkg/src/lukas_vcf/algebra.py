"""Exact coefficient rings.

Two carriers are used throughout the package:

* :class:`WeightPoly`, a sparse polynomial with integer coefficients in the
  diagonal variables ``a_n^(k)``;
* :class:`fractions.Fraction`, for numeric specializations.

A :class:`CoeffTable` hands out diagonal entries in one of the two modes and
a :class:`Ring` tells generic code (series, operators) how to build zeros and
ones without caring which carrier is in use.
"""
from __future__ import annotations

import json
import random
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, NamedTuple, Optional, Tuple, Union


class WindowError(LookupError):
    """A numeric table was asked for an offset it does not cover."""


class RingMismatchError(TypeError):
    """Symbolic and numeric ring elements were combined."""


class Var(NamedTuple):
    """The diagonal variable ``a_n^(k)``: ``k`` is the diagonal, ``n`` the offset."""

    k: int
    n: int

    def __str__(self) -> str:
        return f"a_{self.n}^({self.k})"


Monomial = Tuple[Tuple[Var, int], ...]

ONE_MONOMIAL: Monomial = ()


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for v, e in b:
        merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items()))


def monomial_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def monomial_key(m: Monomial):
    """Graded lexicographic key over ``(k, n)``."""
    return (monomial_degree(m), m)


def monomial_from_vars(variables: Iterable[Var]) -> Monomial:
    counts: Dict[Var, int] = {}
    for v in variables:
        counts[v] = counts.get(v, 0) + 1
    return tuple(sorted(counts.items()))


def _monomial_str(m: Monomial) -> str:
    return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in m)


class WeightPoly:
    """Sparse polynomial in the variables ``a_n^(k)`` with integer coefficients.

    Instances are immutable; zero coefficients are never stored, so two
    polynomials are equal exactly when their term maps are equal.
    Integers act as constants. Combining with a :class:`~fractions.Fraction`
    raises :class:`RingMismatchError`.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        clean: Dict[Monomial, int] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = int(c)
        self.terms = clean
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def _wrap(cls, terms: Dict[Monomial, int]) -> "WeightPoly":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "WeightPoly":
        return cls._wrap({})

    @classmethod
    def one(cls) -> "WeightPoly":
        return cls._wrap({ONE_MONOMIAL: 1})

    @classmethod
    def const(cls, c: int) -> "WeightPoly":
        if isinstance(c, Fraction) and not isinstance(c, int):
            raise RingMismatchError("symbolic polynomials carry integer coefficients")
        return cls._wrap({ONE_MONOMIAL: int(c)} if c else {})

    @classmethod
    def var(cls, k: int, n: int) -> "WeightPoly":
        return cls._wrap({((Var(k, n), 1),): 1})

    @classmethod
    def monomial(cls, m: Monomial, coeff: int = 1) -> "WeightPoly":
        return cls._wrap({m: coeff} if coeff else {})

    # queries ------------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and ONE_MONOMIAL in self.terms)

    def constant_term(self) -> int:
        return self.terms.get(ONE_MONOMIAL, 0)

    def is_unit(self) -> bool:
        return self.is_constant and self.constant_term() in (1, -1)

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def degrees(self) -> set:
        return {monomial_degree(m) for m in self.terms}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: monomial_key(t[0]))

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "WeightPoly":
        if isinstance(other, WeightPoly):
            return other
        if isinstance(other, bool) or not isinstance(other, int):
            raise RingMismatchError(f"cannot combine WeightPoly with {type(other).__name__}")
        return WeightPoly.const(other)

    def __add__(self, other) -> "WeightPoly":
        other = self._coerce(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return WeightPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "WeightPoly":
        return WeightPoly._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "WeightPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "WeightPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "WeightPoly":
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return WeightPoly._wrap({})
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Monomial, int] = {}
        for mb, cb in b.items():
            if not mb:
                for ma, ca in a.items():
                    out[ma] = out.get(ma, 0) + ca * cb
                continue
            for ma, ca in a.items():
                m = monomial_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return WeightPoly._wrap({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "WeightPoly":
        if e < 0:
            raise ValueError("negative power")
        result = WeightPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, WeightPoly):
            return self.terms == other.terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self.terms == WeightPoly.const(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # transforms ---------------------------------------------------------
    def substitute(self, mapping: Union[Mapping[Var, Var], Callable[[Var], Var]]) -> "WeightPoly":
        """Rename variables; the renaming must be injective on the variables present."""
        lookup = mapping if callable(mapping) else (lambda v: mapping.get(v, v))
        present = self.variables()
        images = {v: Var(*lookup(v)) for v in present}
        if len(set(images.values())) != len(images):
            raise ValueError("substitution is not injective on the occurring variables")
        out: Dict[Monomial, int] = {}
        for m, c in self.terms.items():
            nm = tuple(sorted((images[v], e) for v, e in m))
            out[nm] = out.get(nm, 0) + c
        return WeightPoly._wrap(out)

    def evaluate(self, table: "CoeffTable") -> Fraction:
        if table.mode != "numeric":
            raise ValueError("evaluation needs a numeric table")
        cache: Dict[Var, Fraction] = {}
        for m in self.terms:
            for v, _ in m:
                if v not in cache:
                    cache[v] = table.value(v.k, v.n)
        if all(x.denominator == 1 for x in cache.values()):
            # integer tables: stay in int arithmetic until the end
            ints = {v: x.numerator for v, x in cache.items()}
            acc = 0
            for m, c in self.terms.items():
                t = c
                for v, e in m:
                    t *= ints[v] ** e
                acc += t
            return Fraction(acc)
        total = Fraction(0)
        for m, c in self.terms.items():
            t = Fraction(c)
            for v, e in m:
                t *= cache[v] ** e
            total += t
        return total

    # io -----------------------------------------------------------------
    def __repr__(self) -> str:
        return f"WeightPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            if not m:
                body = str(abs(c))
            elif abs(c) == 1:
                body = _monomial_str(m)
            else:
                body = f"{abs(c)}*{_monomial_str(m)}"
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list:
        return [
            {"coeff": str(c), "vars": [[v.k, v.n, e] for v, e in m]}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: list) -> "WeightPoly":
        terms: Dict[Monomial, int] = {}
        for item in data:
            m = tuple(sorted((Var(int(k), int(n)), int(e)) for k, n, e in item["vars"]))
            terms[m] = terms.get(m, 0) + int(item["coeff"])
        return cls(terms)


def poly_add(a: WeightPoly, b: WeightPoly) -> WeightPoly:
    return a + b


def poly_mul(a: WeightPoly, b: WeightPoly) -> WeightPoly:
    return a * b


def poly_substitute(a: WeightPoly, mapping) -> WeightPoly:
    return a.substitute(mapping)


def poly_eval(a: WeightPoly, table: "CoeffTable") -> Fraction:
    return a.evaluate(table)


def reflect_var(v: Var) -> Var:
    """Image of a step weight under the half-plane reflection of paths.

    A downstep of depth ``k`` weighted ``a_n^(k)`` is sent to one weighted
    ``a_{-n-k}^(k)``; on the p-th diagonal this is ``a_n -> a_{-p-n}``.
    """
    return Var(v.k, -v.n - v.k)


# rings ----------------------------------------------------------------------

class Ring:
    """Zero/one factory and type guard for one coefficient carrier."""

    def __init__(self, name: str, carrier: type):
        self.name = name
        self.carrier = carrier

    def zero(self):
        return WeightPoly.zero() if self.carrier is WeightPoly else Fraction(0)

    def one(self):
        return WeightPoly.one() if self.carrier is WeightPoly else Fraction(1)

    def from_int(self, c: int):
        return WeightPoly.const(c) if self.carrier is WeightPoly else Fraction(c)

    def check(self, x):
        if isinstance(x, self.carrier):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return self.from_int(x)
        raise RingMismatchError(f"{type(x).__name__} is not an element of the {self.name} ring")

    def is_unit(self, x) -> bool:
        if self.carrier is WeightPoly:
            return x.is_unit()
        return x != 0

    def inverse(self, x):
        if not self.is_unit(x):
            raise ZeroDivisionError(f"{x} is not invertible in the {self.name} ring")
        if self.carrier is WeightPoly:
            return x
        return 1 / x

    def to_json(self, x):
        return x.to_json() if self.carrier is WeightPoly else fraction_to_str(x)

    def from_json(self, data):
        return WeightPoly.from_json(data) if self.carrier is WeightPoly else fraction_from_str(data)

    def __repr__(self) -> str:
        return f"Ring({self.name})"


SYMBOLIC = Ring("symbolic", WeightPoly)
NUMERIC = Ring("numeric", Fraction)


def ring_of(x) -> Ring:
    if isinstance(x, WeightPoly):
        return SYMBOLIC
    if isinstance(x, Fraction):
        return NUMERIC
    raise RingMismatchError(f"{type(x).__name__} is not a ring element")


def fraction_to_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def fraction_from_str(s: str) -> Fraction:
    return Fraction(s)


def ring_element_to_json(x):
    return ring_of(x).to_json(x)


# coefficient tables ---------------------------------------------------------

class CoeffTable:
    """Source of the diagonal entries ``a_n^(k)``, ``0 <= k <= p``.

    In symbolic mode every lookup returns the variable itself (or zero on a
    diagonal listed in ``zero_diagonals``). In numeric mode lookups come from
    ``values``; a lookup outside ``window`` raises :class:`WindowError`, and a
    lookup inside the window that has no explicit value is zero only on a
    zeroed diagonal.

    Tables compare by identity so they can key caches.
    """

    def __init__(
        self,
        p: int,
        mode: str = "symbolic",
        values: Optional[Mapping[Tuple[int, int], Fraction]] = None,
        window: Optional[Tuple[int, int]] = None,
        zero_diagonals: Iterable[int] = (),
    ):
        if p < 1:
            raise ValueError("p must be at least 1")
        if mode not in ("symbolic", "numeric"):
            raise ValueError(f"unknown mode {mode!r}")
        self.p = p
        self.mode = mode
        self.zero_diagonals = frozenset(zero_diagonals)
        self.values = {(int(k), int(n)): Fraction(v) for (k, n), v in (values or {}).items()}
        if mode == "numeric":
            if window is None:
                offsets = [n for _, n in self.values] or [0]
                window = (min(offsets), max(offsets))
            for k in range(p + 1):
                if k in self.zero_diagonals:
                    continue
                for n in range(window[0], window[1] + 1):
                    if (k, n) not in self.values:
                        raise ValueError(f"numeric table misses a_{n}^({k}) inside its window")
        self.window = window
        self.ring = SYMBOLIC if mode == "symbolic" else NUMERIC
        self._cache: Dict[Tuple[int, int], object] = {}
        # specialized series keyed by callers (see vcf.family_series)
        self.series_cache: Dict[tuple, object] = {}

    # constructors -------------------------------------------------------
    @classmethod
    def symbolic(cls, p: int, bidiagonal: bool = False) -> "CoeffTable":
        return cls(p, "symbolic", zero_diagonals=range(p) if bidiagonal else ())

    @classmethod
    def random(
        cls,
        p: int,
        seed: int,
        window: Tuple[int, int],
        bidiagonal: bool = False,
    ) -> "CoeffTable":
        """Seeded table with integer values drawn from [-9, 9] without 0."""
        rng = random.Random(seed)
        choices = [v for v in range(-9, 10) if v]
        zero = set(range(p)) if bidiagonal else set()
        values = {}
        for k in range(p + 1):
            for n in range(window[0], window[1] + 1):
                v = rng.choice(choices)
                if k not in zero:
                    values[(k, n)] = Fraction(v)
        return cls(p, "numeric", values, window, zero_diagonals=zero)

    @classmethod
    def constant(cls, p: int, value, window: Tuple[int, int], bidiagonal: bool = False) -> "CoeffTable":
        zero = set(range(p)) if bidiagonal else set()
        values = {
            (k, n): Fraction(value)
            for k in range(p + 1)
            if k not in zero
            for n in range(window[0], window[1] + 1)
        }
        return cls(p, "numeric", values, window, zero_diagonals=zero)

    # lookup -------------------------------------------------------------
    def value(self, k: int, n: int):
        if not 0 <= k <= self.p:
            raise ValueError(f"diagonal {k} outside [0, {self.p}]")
        hit = self._cache.get((k, n))
        if hit is not None:
            return hit
        if self.mode == "symbolic":
            out = WeightPoly.zero() if k in self.zero_diagonals else WeightPoly.var(k, n)
        else:
            lo, hi = self.window
            if not lo <= n <= hi:
                raise WindowError(f"a_{n}^({k}) lies outside the table window [{lo}, {hi}]")
            out = self.values.get((k, n))
            if out is None:
                out = Fraction(0)
        self._cache[(k, n)] = out
        return out

    def specialize(self, x):
        """Evaluate a symbolic ring element against this (numeric) table."""
        if self.mode != "numeric":
            raise ValueError("specialize needs a numeric table")
        return x.evaluate(self) if isinstance(x, WeightPoly) else x

    def with_value(self, k: int, n: int, value) -> "CoeffTable":
        """Copy of a numeric table with one entry replaced."""
        if self.mode != "numeric":
            raise ValueError("only numeric tables carry values")
        values = dict(self.values)
        values[(k, n)] = Fraction(value)
        return CoeffTable(self.p, "numeric", values, self.window, self.zero_diagonals)

    # io -----------------------------------------------------------------
    def to_json(self) -> dict:
        out = {"p": self.p, "mode": self.mode}
        if self.mode == "numeric":
            out["window"] = list(self.window)
            out["values"] = [[k, n, fraction_to_str(v)] for (k, n), v in sorted(self.values.items())]
        if self.zero_diagonals:
            out["zero_diagonals"] = sorted(self.zero_diagonals)
        return out

    @classmethod
    def from_json(cls, data: Union[dict, str]) -> "CoeffTable":
        if isinstance(data, str):
            data = json.loads(data)
        values = {(int(k), int(n)): fraction_from_str(str(v)) for k, n, v in data.get("values", [])}
        window = tuple(data["window"]) if data.get("window") is not None else None
        return cls(
            int(data["p"]),
            data.get("mode", "symbolic"),
            values,
            window,
            data.get("zero_diagonals", ()),
        )

    def __repr__(self) -> str:
        extra = f", window={self.window}" if self.mode == "numeric" else ""
        return f"CoeffTable(p={self.p}, mode={self.mode!r}{extra})"
