"""Named verification suites shared by the command line and the test suite.

A suite takes a :class:`SuiteConfig` and returns a list of
:class:`~lukas_vcf.vcf.Report`. Numeric runs check several seeded tables;
with ``LUKAS_VCF_THREADS`` above 1 the tables are spread over worker
processes; reports come back in job order either way.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, Dict, List, Optional, Tuple

from .algebra import CoeffTable, reflect_var
from .operators import TWO_SIDED, forward, hp_defect_order, moment, reflected
from .paths import FamilySpec, count, enumerate_paths, fuss_catalan, genetic_sum, weight_polynomial
from .vcf import (
    Failure,
    Report,
    cf_term,
    family_series,
    tamper_term,
    verify_akv,
    verify_bidiagonal,
    verify_kalyagin,
    verify_lemma_lft,
    verify_theorem_A,
    verify_theorem_W,
)


@dataclass(frozen=True)
class SuiteConfig:
    p: int
    N: int = 12
    mode: str = "symbolic"
    seed: int = 0
    tables: int = 1
    tamper: Optional[Tuple[int, int]] = None
    table_json: Optional[dict] = None

    def validate(self) -> "SuiteConfig":
        if self.p < 1:
            raise ValueError("p must be at least 1")
        if self.N < 2:
            raise ValueError("N must be at least 2")
        if self.mode not in ("symbolic", "numeric"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.tables < 1:
            raise ValueError("need at least one table")
        return self


def default_window(p: int, N: int) -> Tuple[int, int]:
    """Offsets wide enough for every suite at truncation ``N``."""
    return (-(p + 1) * (N + 3), 2 * N + 3 * p + 6)


def make_table(cfg: SuiteConfig, seed: int, bidiagonal: bool = False) -> CoeffTable:
    if cfg.mode == "symbolic":
        return CoeffTable.symbolic(cfg.p, bidiagonal)
    if cfg.table_json is not None:
        table = CoeffTable.from_json(cfg.table_json)
        if table.p != cfg.p:
            raise ValueError("coefficient file disagrees with --p")
        if bidiagonal and not set(range(cfg.p)) <= table.zero_diagonals:
            table = CoeffTable(
                table.p,
                "numeric",
                {kn: v for kn, v in table.values.items() if kn[0] == table.p},
                table.window,
                zero_diagonals=range(table.p),
            )
        return table
    return CoeffTable.random(cfg.p, seed, default_window(cfg.p, cfg.N), bidiagonal)


def _seeds(cfg: SuiteConfig) -> List[Optional[int]]:
    if cfg.mode == "symbolic":
        return [None]
    if cfg.table_json is not None:
        return [None]
    return list(range(cfg.seed, cfg.seed + cfg.tables))


def _tag(reports: List[Report], seed: Optional[int]) -> List[Report]:
    for r in reports:
        r.seed = seed
    return reports


# table-driven suites ------------------------------------------------------------

def _theorem_A(cfg: SuiteConfig, seed) -> List[Report]:
    return verify_theorem_A(cfg.N, make_table(cfg, seed), tamper=cfg.tamper)


def _theorem_W(cfg: SuiteConfig, seed) -> List[Report]:
    return verify_theorem_W(cfg.N, make_table(cfg, seed), tamper=cfg.tamper)


def _bidiagonal(cfg: SuiteConfig, seed) -> List[Report]:
    return verify_bidiagonal(cfg.N, make_table(cfg, seed, bidiagonal=True), tamper=cfg.tamper)


def _lemma_lft(cfg: SuiteConfig, seed) -> List[Report]:
    table = make_table(cfg, seed)
    out = []
    for k in range(2 * cfg.p + 3):
        term = None
        if cfg.tamper is not None and k == cfg.tamper[1]:
            term = tamper_term(cf_term(k + 1, table), cfg.tamper[0] % cfg.p)
        out.append(verify_lemma_lft(k, cfg.N, table, term))
    return out


def _kalyagin(cfg: SuiteConfig, seed) -> List[Report]:
    table = make_table(cfg, seed)
    hook = None
    if cfg.tamper is not None:
        comp, stage = cfg.tamper

        def _alter(terms):
            if 1 <= stage <= len(terms):
                terms[stage - 1] = tamper_term(terms[stage - 1], comp % cfg.p)
            return terms

        hook = _alter
    out = []
    for n in range(1, min(2 * cfg.p + 1, 5) + 1):
        out.extend(verify_kalyagin(n, cfg.N, table, hook))
    return out


def _akv(cfg: SuiteConfig, seed) -> List[Report]:
    table = make_table(cfg, seed, bidiagonal=True)
    reports = [verify_akv(depth, cfg.N, table) for depth in range(1, 6)]
    reach = [r.checked_to for r in reports]
    mono = Report("alternative-expansion-range-grows", cfg.p, cfg.N)
    for depth in range(1, len(reach)):
        if reach[depth] < reach[depth - 1]:
            mono.failures.append(Failure(0, reach[depth], reach[depth], reach[depth - 1]))
    return reports + [mono]


def _moments(cfg: SuiteConfig, seed) -> List[Report]:
    """Family weight polynomials against operator moments for A, B and W."""
    table = make_table(cfg, seed)
    p, N = cfg.p, cfg.N
    cases = [("W", 0, TWO_SIDED)]
    for q in range(3):
        cases.append(("A", q, forward(q)))
        cases.append(("B", q, reflected(q)))
    out = []
    for tag, q, kind in cases:
        family = {"W": "P", "A": "D", "B": "Dhat"}[tag]
        report = Report(f"moments-{tag}[q={q}]", p, N)
        for j in range(p + 1):
            for n in range(N):
                if table.mode == "numeric":
                    lhs = family_series(tag, j, q, N, table).coeff(n + 1)
                else:
                    lhs = weight_polynomial(FamilySpec(family, p, n, j, q), table)
                if cfg.tamper is not None and (j, n + 1) == tuple(cfg.tamper) and tag == "A" and q == 0:
                    lhs = lhs + 1
                rhs = moment(kind, n, j, table)
                if lhs != rhs:
                    report.failures.append(Failure(j, n + 1, lhs, rhs))
        report.checked_to = N
        out.append(report)
    return out


def _hp_order(cfg: SuiteConfig, seed) -> List[Report]:
    table = make_table(cfg, seed)
    p = cfg.p
    report = Report("hermite-pade-order", p, cfg.N)
    # symbolic moments grow quickly with n, so the symbolic run stops earlier
    top = cfg.N if table.mode == "numeric" else min(cfg.N, 6)
    for n in range(1, top + 1):
        for k in range(p):
            bound = (n - k) // p + 1
            # the defect is trusted through z^(-(N - n)), just enough for the bound
            order = hp_defect_order(n, k, n + bound, table)
            if order < bound:
                report.failures.append(Failure(k, order, order, bound))
    return [report]


# table-free suites -----------------------------------------------------------------

def _genetic(cfg: SuiteConfig, seed) -> List[Report]:
    p = cfg.p
    table = CoeffTable.symbolic(p, bidiagonal=True)
    out = []
    for fam, path_family, qs in (("R", "R", [0]), ("S", "S", [0, 1, 2]), ("T", "Shat", [0, 1, 2])):
        for q in qs:
            report = Report(f"genetic-sum-{fam}[q={q}]", p, cfg.N)
            for j in range(p + 1):
                for m in range(4):
                    n = m * (p + 1) + j
                    lhs = genetic_sum(fam, p, m, j, q, table)
                    if cfg.tamper is not None and (j, m) == tuple(cfg.tamper) and fam == "S" and q == 0:
                        lhs = lhs + 1
                    rhs = weight_polynomial(FamilySpec(path_family, p, n, j, q), table)
                    if lhs != rhs:
                        report.failures.append(Failure(j, n, lhs, rhs))
            out.append(report)
    return out


def _counting(cfg: SuiteConfig, seed) -> List[Report]:
    p = cfg.p
    out = []
    for fam in ("R", "S"):
        report = Report(f"path-count-{fam}", p, cfg.N)
        for j in range(p + 1):
            for m in range(5):
                n = m * (p + 1) + j
                spec = FamilySpec(fam, p, n, j)
                walked = sum(1 for _ in enumerate_paths(spec))
                closed = count(spec)
                if fam == "S" and closed != fuss_catalan(p, m, j):
                    report.failures.append(Failure(j, n, closed, fuss_catalan(p, m, j)))
                if walked != closed:
                    report.failures.append(Failure(j, n, walked, closed))
        out.append(report)
    return out


def _reflection(cfg: SuiteConfig, seed) -> List[Report]:
    p = cfg.p
    table = CoeffTable.symbolic(p, bidiagonal=True)
    out = []
    for q in range(3 if p > 1 else 2):
        report = Report(f"reflection[q={q}]", p, cfg.N)
        for j in range(p + 1):
            for n in range(cfg.N + 1):
                lhs = weight_polynomial(FamilySpec("Shat", p, n, j, q), table)
                rhs = weight_polynomial(FamilySpec("S", p, n, j, q), table).substitute(reflect_var)
                if lhs != rhs:
                    report.failures.append(Failure(j, n, lhs, rhs))
        out.append(report)
    return out


def _scalar(cfg: SuiteConfig, seed) -> List[Report]:
    """One-diagonal-below case: the three-term relation among the moments and the
    classical convergents."""
    table = make_table(replace(cfg, p=1), seed)
    N = cfg.N
    A = lambda j, q=0: family_series("A", j, q, N, table)
    report = Report("scalar-moment-recursion", 1, N)
    s = [A(0).coeff(n + 1) for n in range(N)]
    s1 = [A(0, 1).coeff(n + 1) for n in range(N)]
    b0, a0 = table.value(0, 0), table.value(1, 0)
    for n in range(1, N):
        rhs = b0 * s[n - 1]
        for k in range(n - 1):
            rhs = rhs + a0 * s1[k] * s[n - k - 2]
        if s[n] != rhs:
            report.failures.append(Failure(0, n + 1, s[n], rhs))
    report.checked_to = N
    reports = [report]
    for n in range(1, 5):
        reports.extend(verify_kalyagin(n, N, table))
    return reports


SUITES: Dict[str, Callable[[SuiteConfig, Optional[int]], List[Report]]] = {
    "theorem-A": _theorem_A,
    "theorem-W": _theorem_W,
    "bidiagonal": _bidiagonal,
    "lemma-lft": _lemma_lft,
    "kalyagin": _kalyagin,
    "akv": _akv,
    "moments": _moments,
    "hp-order": _hp_order,
    "genetic": _genetic,
    "counting": _counting,
    "reflection": _reflection,
    "scalar": _scalar,
}
# command-line spellings kept for compatibility with existing scripts
ALIASES = {"prop-4.1": "moments"}
TABLE_FREE = {"genetic", "counting", "reflection"}


def resolve(name: str) -> List[str]:
    if name == "all":
        return list(SUITES)
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return [name]


def _job(args) -> List[Report]:
    name, cfg, seed = args
    return _tag(SUITES[name](cfg, seed), seed)


def thread_cap() -> int:
    raw = os.environ.get("LUKAS_VCF_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"LUKAS_VCF_THREADS must be an integer, got {raw!r}")


def run_suite(name: str, cfg: SuiteConfig, threads: Optional[int] = None) -> List[Report]:
    """Run one suite (or ``"all"``) and return its reports in a fixed order."""
    cfg.validate()
    jobs = []
    for suite in resolve(name):
        seeds = [None] if suite in TABLE_FREE else _seeds(cfg)
        jobs.extend((suite, cfg, seed) for seed in seeds)
    threads = thread_cap() if threads is None else threads
    if threads > 1 and len(jobs) > 1:
        # map keeps job order, so the output does not depend on scheduling
        with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as pool:
            chunks = list(pool.map(_job, jobs))
    else:
        chunks = [_job(j) for j in jobs]
    return [r for chunk in chunks for r in chunk]
