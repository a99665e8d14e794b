"""Jacobi-Perron vector continued fraction for the resolvents ``(A_0, ..., A_{p-1})``.

Stage ``k`` of the fraction is a :class:`CFTerm` ``(c_k, d_k)``; the
remainder after ``k`` stages is the tail vector ``v_k``. Both switch form at
``k = p + 1``, when the first numerator entry stops being 1 and picks up
``-a_{k-p-1}^(p)``.

Every ``verify_*`` function compares two independently computed sides
coefficient by coefficient and returns :class:`Report` objects locating any
mismatch by (component, exponent).
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

from .algebra import CoeffTable, ring_element_to_json
from .operators import char_polys
from .paths import FamilySpec, weight_polynomial
from .series import (
    FAMILY_TAGS,
    LaurentSeries,
    Polynomial,
    SeriesVector,
    ValidityError,
    rational_to_series,
    vector_divide,
)


# reports ------------------------------------------------------------------------

@dataclass
class Failure:
    component: int
    exponent: int
    lhs: object = None
    rhs: object = None

    def to_json(self) -> dict:
        out = {"component": self.component, "exponent": self.exponent}
        if self.lhs is not None:
            out["lhs"] = str(self.lhs)
            out["rhs"] = str(self.rhs)
        return out


@dataclass
class Report:
    identity: str
    p: int
    N: int
    failures: List[Failure] = field(default_factory=list)
    checked_to: Optional[int] = None
    seed: Optional[int] = None

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "p": self.p,
            "N": self.N,
            "status": self.status,
            "failures": [f.to_json() for f in self.failures],
        }
        if self.checked_to is not None:
            out["checked_to"] = self.checked_to
        if self.seed is not None:
            out["seed"] = self.seed
        return out

    def __str__(self) -> str:
        where = f"p={self.p}, N={self.N}" + (f", seed={self.seed}" if self.seed is not None else "")
        head = f"[{self.status.upper()}] {self.identity} ({where})"
        if self.failures:
            f = self.failures[0]
            head += f": first mismatch at component {f.component}, exponent {f.exponent}"
        return head


def compare_vectors(
    identity: str,
    lhs: Sequence[LaurentSeries],
    rhs: Sequence[LaurentSeries],
    p: int,
    N: int,
    require_to: Optional[int] = None,
    labels: Optional[Sequence[int]] = None,
) -> Report:
    """Compare two series vectors on their common trusted range.

    ``require_to`` is the highest exponent the caller expects to be
    checkable; a shorter common range raises :class:`ValidityError` instead
    of passing vacuously. ``labels`` names the components in failures
    (default ``0, 1, ...``), so that a mismatch in ``A_j`` is reported as ``j``.
    """
    if len(lhs) != len(rhs):
        raise ValueError("vectors of different length")
    labels = list(range(len(lhs))) if labels is None else list(labels)
    report = Report(identity, p, N)
    reach = None
    for comp, a, b in zip(labels, lhs, rhs):
        _, hi = a.common_range(b)
        if require_to is not None and hi < require_to:
            raise ValidityError(
                f"{identity}: component {comp} is checkable only through z^(-{hi}), "
                f"expected z^(-{require_to})"
            )
        reach = hi if reach is None else min(reach, hi)
        for e, x, y in a.mismatches(b):
            report.failures.append(Failure(comp, e, x, y))
    report.checked_to = reach
    return report


# series sources -------------------------------------------------------------------

@lru_cache(maxsize=None)
def _symbolic_family_series(tag: str, p: int, j: int, q: int, N: int, zeroed: frozenset) -> LaurentSeries:
    table = CoeffTable(p, "symbolic", zero_diagonals=zeroed)
    family = FAMILY_TAGS[tag]
    coeffs = {n + 1: weight_polynomial(FamilySpec(family, p, n, j, q), table) for n in range(N)}
    return LaurentSeries.from_coeffs(table.ring, coeffs, 1, N)


def family_series(tag: str, j: int, q: int, N: int, table: CoeffTable) -> LaurentSeries:
    """Family generating series via path enumeration.

    Numeric tables evaluate the (cached) symbolic weight polynomials, which is
    the same value as summing numeric path weights and much cheaper when many
    tables are checked.
    """
    sym = _symbolic_family_series(tag, table.p, j, q, N, table.zero_diagonals)
    if table.mode == "symbolic":
        return sym
    memo = table.series_cache
    key = (tag, j, q, N)
    if key not in memo:
        memo[key] = sym.specialize(table)
    return memo[key]


def _one(table: CoeffTable) -> LaurentSeries:
    return LaurentSeries.constant(table.ring, table.ring.one())


def _z(table: CoeffTable) -> LaurentSeries:
    return LaurentSeries.z_power(table.ring, 1)


def _tampered(series: LaurentSeries, exponent: int) -> LaurentSeries:
    return series.with_coeff(exponent, series.coeff(exponent) + 1)


# coefficients of the fraction -------------------------------------------------------

@dataclass(frozen=True)
class CFTerm:
    c: Tuple[object, ...]
    d: Tuple[Polynomial, ...]

    def to_json(self) -> dict:
        return {
            "c": [ring_element_to_json(x) for x in self.c],
            "d": [poly.to_json() for poly in self.d],
        }


def cf_term(k: int, table: CoeffTable) -> CFTerm:
    """Stage ``k >= 1``: numerators ``c_k`` and linear denominators ``d_k``.

    Entry ``t`` of ``d_k`` is ``-a_{k-p+t}^(p-1-t)`` (zero while the offset is
    negative) and the last entry is ``z - a_{k-1}^(0)``.
    """
    if k < 1:
        raise ValueError("stages are numbered from 1")
    p, ring = table.p, table.ring
    one = ring.one()
    c = [one] * p
    if k >= p + 1:
        c[0] = -table.value(p, k - p - 1)
    d = []
    for t in range(p - 1):
        r = k - p + t
        d.append(Polynomial(ring, [-table.value(p - 1 - t, r)] if r >= 0 else []))
    d.append(Polynomial(ring, [-table.value(0, k - 1), one]))
    return CFTerm(tuple(c), tuple(d))


def tamper_term(term: CFTerm, component: int, part: str = "d") -> CFTerm:
    """Negative-control copy of a stage with one coefficient altered.

    ``part="d"`` drops the constant coefficient of ``d[component]`` (or sets
    it to 1 when it is already zero); ``part="c"`` adds 1 to ``c[component]``.
    """
    if part == "c":
        c = list(term.c)
        c[component] = c[component] + 1
        return replace(term, c=tuple(c))
    d = list(term.d)
    poly = d[component]
    ring = poly.ring
    const = poly.coeff(0)
    new0 = ring.zero() if const else ring.one()
    rest = poly.coeffs[1:] if poly.coeffs else []
    d[component] = Polynomial(ring, [new0] + list(rest))
    return replace(term, d=tuple(d))


def tail_vector(k: int, N: int, table: CoeffTable) -> SeriesVector:
    """``v_k`` built from the shifted family series ``A_j^(k)``.

    Entry ``t`` is ``A_t^(k)`` while ``t < p - k``; afterwards it is
    ``-sum_{j=p-t}^{p} a_{k-p+t}^(j) A_{j-p+t}^(k)``. ``v_0`` is
    ``(A_0, ..., A_{p-1})``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    p = table.p
    out = []
    for t in range(p):
        if t < p - k:
            out.append(family_series("A", t, k, N, table))
            continue
        r = k - p + t
        acc = LaurentSeries.exact(table.ring, {})
        for j in range(p - t, p + 1):
            a = table.value(j, r)
            if a:
                acc = acc + family_series("A", j - p + t, k, N, table).scale(a)
        out.append(-acc)
    return tuple(out)


def convergent_polys(terms: Sequence[CFTerm]) -> Tuple[Tuple[Polynomial, ...], Polynomial]:
    """Exact value of the tail-free fraction as ``(P_1, ..., P_p) / Q``.

    Writing the inner value as ``P/Q`` gives ``d + P/Q = G/Q`` with
    ``G = dQ + P``, and the vector division becomes
    ``(c_1 Q, c_2 G_1, ..., c_p G_{p-1}) / G_p``.
    """
    if not terms:
        raise ValueError("need at least one stage")
    ring = terms[0].d[-1].ring
    p = len(terms[0].c)
    numer = [Polynomial(ring, [])] * p
    denom = Polynomial.constant(ring, ring.one())
    for term in reversed(terms):
        g = [d * denom + x for d, x in zip(term.d, numer)]
        numer = [denom * term.c[0]] + [g[i - 1] * term.c[i] for i in range(1, p)]
        denom = g[-1]
    return tuple(numer), denom


def eval_finite_cf(
    terms: Sequence[CFTerm],
    tail: Optional[Sequence[LaurentSeries]] = None,
    N: Optional[int] = None,
) -> SeriesVector:
    """Fold ``c_1/(d_1 + c_2/(d_2 + ... + c_n/(d_n + tail)))`` from the right.

    Without a tail the fraction is a vector of rational functions, expanded
    through ``z^(-N)``. A tail may contain :meth:`LaurentSeries.big_o`
    entries; the result then only carries coefficients that the unknown tail
    cannot affect.
    """
    if not terms:
        raise ValueError("need at least one stage")
    if tail is None:
        if N is None:
            raise ValueError("an exact fraction needs N")
        numer, denom = convergent_polys(terms)
        return tuple(rational_to_series(x, denom, N) for x in numer)
    ring = terms[0].d[-1].ring
    acc = tuple(tail)
    for term in reversed(terms):
        den = [poly.to_series() + x for poly, x in zip(term.d, acc)]
        num = [LaurentSeries.constant(ring, c) for c in term.c]
        acc = vector_divide(num, den, N)
    return acc


# identity checks -----------------------------------------------------------------

def verify_lemma_lft(k: int, N: int, table: CoeffTable, term: Optional[CFTerm] = None) -> Report:
    """``v_k = c_{k+1} / (d_{k+1} + v_{k+1})``; ``term`` overrides stage ``k+1``."""
    term = term if term is not None else cf_term(k + 1, table)
    lhs = tail_vector(k, N, table)
    rhs = eval_finite_cf([term], tail_vector(k + 1, N, table), N)
    return compare_vectors(f"tail-recursion[k={k}]", lhs, rhs, table.p, N, require_to=N)


def verify_kalyagin(
    n: int,
    N: int,
    table: CoeffTable,
    tamper: Optional[Callable[[List[CFTerm]], List[CFTerm]]] = None,
) -> List[Report]:
    """Finite fraction with tail versus the resolvents, and without tail versus
    the ratios ``q_{n,k}/q_n``."""
    p = table.p
    terms = [cf_term(m, table) for m in range(1, n + 1)]
    if tamper is not None:
        terms = tamper(list(terms))
    resolvents = tuple(family_series("A", j, 0, N, table) for j in range(p))
    with_tail = eval_finite_cf(terms, tail_vector(n, N, table), N)
    reports = [compare_vectors(f"finite-fraction-with-tail[n={n}]", with_tail, resolvents, p, N, require_to=N)]
    convergent = eval_finite_cf(terms, None, N)
    pair = char_polys(n, table)
    ratios = tuple(rational_to_series(pair.q_nk[k], pair.q_n, N) for k in range(1, p + 1))
    reports.append(compare_vectors(f"convergent-equals-char-poly-ratio[n={n}]", convergent, ratios, p, N, require_to=N))
    return reports


def verify_theorem_A(
    N: int,
    table: CoeffTable,
    tamper: Optional[Tuple[int, int]] = None,
    shifts: Optional[Sequence[int]] = None,
) -> List[Report]:
    """Relations among ``A_j`` and the shifted ``A_j^(k)``.

    ``tamper=(j, e)`` bumps the coefficient of ``z^(-e)`` in the enumerated
    ``A_j`` used on the left of the first checks.
    """
    p = table.p
    A = lambda j, q=0: family_series("A", j, q, N, table)
    a = table.value
    z, one = _z(table), _one(table)
    lhs_A = [A(j) for j in range(p + 1)]
    if tamper is not None:
        j, e = tamper
        lhs_A[j] = _tampered(lhs_A[j], e)
    reports = []

    den = z - a(0, 0)
    for j in range(1, p + 1):
        den = den - A(j - 1, 1).scale(a(j, 0))
    reports.append(compare_vectors("A0-reciprocal", [lhs_A[0]], [den.invert(N)], p, N, require_to=N))

    lhs = [lhs_A[j] for j in range(1, p + 1)]
    rhs = [A(0) * A(j - 1, 1) for j in range(1, p + 1)]
    reports.append(compare_vectors("Aj-factorization", lhs, rhs, p, N, require_to=N, labels=range(1, p + 1)))

    rhs = LaurentSeries.exact(table.ring, {})
    for j in range(p + 1):
        rhs = rhs + A(j).scale(a(j, 0))
    reports.append(compare_vectors("zA0-minus-one", [z * lhs_A[0] - one], [rhs], p, N, require_to=N - 1))

    lhs, rhs, pairs = [], [], []
    for i in range(p + 1):
        for j in range(i + 1, p + 1):
            pairs.append(j)
            lhs.append(lhs_A[j])
            rhs.append(A(i) * A(j - i - 1, i + 1))
    reports.append(compare_vectors("Aj-Ai-factorization", lhs, rhs, p, N, require_to=N, labels=pairs))

    for k in shifts if shifts is not None else range(1, p + 2):
        den = z - a(0, k)
        for j in range(1, p + 1):
            den = den - A(j - 1, k + 1).scale(a(j, k))
        lhs = [A(0, k)] + [A(j, k) for j in range(1, p + 1)]
        rhs = [den.invert(N)] + [A(0, k) * A(j - 1, k + 1) for j in range(1, p + 1)]
        reports.append(compare_vectors(f"shifted-A-relations[k={k}]", lhs, rhs, p, N, require_to=N))
    return reports


def verify_theorem_W(N: int, table: CoeffTable, tamper: Optional[Tuple[int, int]] = None) -> List[Report]:
    """Relations tying the two-sided series ``W_j`` to ``A^(q)`` and ``B^(q)``."""
    p = table.p
    W = lambda j: family_series("W", j, 0, N, table)
    one = _one(table)
    A1 = lambda j, q=1: one if j == -1 else family_series("A", j, q, N, table)
    B1 = lambda j: one if j == -1 else family_series("B", j, 1, N, table)
    a = table.value
    lhs_W = [W(j) for j in range(p + 1)]
    if tamper is not None:
        j, e = tamper
        lhs_W[j] = _tampered(lhs_W[j], e)
    reports = []

    den = _z(table) - a(0, 0)
    for j in range(1, p + 1):
        for k in range(j + 1):
            c = a(j, -k)
            if c:
                den = den - (A1(j - k - 1) * B1(k - 1)).scale(c)
    reports.append(compare_vectors("W0-reciprocal", [lhs_W[0]], [den.invert(N)], p, N, require_to=N))

    lhs = [lhs_W[j] for j in range(1, p + 1)]
    rhs = [W(0) * A1(j - 1) for j in range(1, p + 1)]
    reports.append(compare_vectors("Wj-factorization", lhs, rhs, p, N, require_to=N, labels=range(1, p + 1)))

    lhs, rhs, pairs = [], [], []
    for i in range(p + 1):
        for j in range(i + 1, p + 1):
            pairs.append(j)
            lhs.append(lhs_W[j])
            rhs.append(W(i) * A1(j - i - 1, i + 1))
    reports.append(compare_vectors("Wj-Wi-factorization", lhs, rhs, p, N, require_to=N, labels=pairs))
    return reports


def _require_bidiagonal(table: CoeffTable):
    if not set(range(table.p)) <= table.zero_diagonals:
        raise ValueError("this check needs a bi-diagonal table (diagonals 0..p-1 zeroed)")


def verify_bidiagonal(N: int, table: CoeffTable, tamper: Optional[Tuple[int, int]] = None) -> List[Report]:
    """Relations among the p-Dyck series ``S_j``, ``T_j``, ``R_j`` (``a_n = a_n^(p)``)."""
    _require_bidiagonal(table)
    p = table.p
    one = _one(table)
    S = lambda j, q=0: one if j == -1 else family_series("S", j, q, N, table)
    T = lambda j, q=0: one if j == -1 else family_series("T", j, q, N, table)
    R = lambda j: family_series("R", j, 0, N, table)
    a = lambda n: table.value(p, n)
    z = _z(table)
    lhs_S = [S(j) for j in range(p + 1)]
    if tamper is not None:
        j, e = tamper
        lhs_S[j] = _tampered(lhs_S[j], e)
    reports = []

    reports.append(compare_vectors(
        "S-equals-A-bidiagonal",
        [lhs_S[j] for j in range(p + 1)],
        [family_series("A", j, 0, N, table) for j in range(p + 1)],
        p, N, require_to=N,
    ))

    den = z - S(p - 1, 1).scale(a(0))
    reports.append(compare_vectors("S0-reciprocal", [lhs_S[0]], [den.invert(N)], p, N, require_to=N))

    reports.append(compare_vectors(
        "Sj-factorization",
        [lhs_S[j] for j in range(1, p + 1)],
        [S(0) * S(j - 1, 1) for j in range(1, p + 1)],
        p, N, require_to=N, labels=range(1, p + 1),
    ))

    reports.append(compare_vectors(
        "zS0-minus-one", [z * lhs_S[0] - one], [S(p).scale(a(0))], p, N, require_to=N - 1
    ))

    lhs, rhs, pairs = [], [], []
    for i in range(p + 1):
        for j in range(i + 1, p + 1):
            pairs.append(j)
            lhs.append(lhs_S[j])
            rhs.append(S(i) * S(j - i - 1, i + 1))
    reports.append(compare_vectors("Sj-Si-factorization", lhs, rhs, p, N, require_to=N, labels=pairs))

    den = z
    for ell in range(p + 1):
        den = den - (S(p - ell - 1, 1) * T(ell - 1, 1)).scale(a(-ell))
    reports.append(compare_vectors("R0-reciprocal", [R(0)], [den.invert(N)], p, N, require_to=N))

    reports.append(compare_vectors(
        "Rj-factorization",
        [R(j) for j in range(1, p + 1)],
        [R(0) * S(j - 1, 1) for j in range(1, p + 1)],
        p, N, require_to=N, labels=range(1, p + 1),
    ))

    lhs, rhs, pairs = [], [], []
    for i in range(p + 1):
        for j in range(i + 1, p + 1):
            pairs.append(j)
            lhs.append(R(j))
            rhs.append(R(i) * S(j - i - 1, i + 1))
    reports.append(compare_vectors("Rj-Ri-factorization", lhs, rhs, p, N, require_to=N, labels=pairs))
    return reports


# alternative expansion for the bi-diagonal case ------------------------------------

def akv_terms(depth: int, table: CoeffTable) -> List[CFTerm]:
    """Stages with denominators ``(0, ..., 0, z)``; numerators ``(1, ..., 1)``
    first and ``(1, ..., 1, -a_{m-2})`` at stage ``m >= 2``."""
    _require_bidiagonal(table)
    p, ring = table.p, table.ring
    one = ring.one()
    d = tuple([Polynomial(ring, [])] * (p - 1) + [Polynomial.z(ring)])
    terms = []
    for m in range(1, depth + 1):
        c = [one] * p
        if m >= 2:
            c[-1] = -table.value(p, m - 2)
        terms.append(CFTerm(tuple(c), d))
    return terms


def akv_expansion(depth: int, N: int, table: CoeffTable) -> SeriesVector:
    """Depth-limited evaluation of the alternative expansion of ``(S_0, ..., S_{p-1})``.

    The discarded remainder is only known to start at ``z^(-t-1)`` in entry
    ``t``, so the returned series stop where that remainder could interfere.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    p = table.p
    tail = tuple(LaurentSeries.big_o(table.ring, t + 1) for t in range(p))
    return eval_finite_cf(akv_terms(depth, table), tail, N)


def verify_akv(depth: int, N: int, table: CoeffTable) -> Report:
    p = table.p
    lhs = akv_expansion(depth, N, table)
    rhs = tuple(family_series("S", j, 0, N, table) for j in range(p))
    return compare_vectors(f"alternative-expansion[depth={depth}]", lhs, rhs, p, N)
