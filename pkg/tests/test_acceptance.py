"""Acceptance gate: ten criteria, each timed against its budget.

Every criterion prints one line ``[PASS]`` or ``[FAIL]`` with its runtime. Run with
``pytest tests/test_acceptance.py -v`` or directly with ``python3 tests/test_acceptance.py``.
"""

import os
import sys
import time
from math import comb

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from lukas_vcf import (  # noqa: E402
    TWO_SIDED,
    CoeffTable,
    FamilySpec,
    count,
    cf_term,
    enumerate_paths,
    forward,
    genetic_sum,
    moment,
    reflect_var,
    reflected,
    verify_kalyagin,
    verify_lemma_lft,
    weight_polynomial,
)
from lukas_vcf.harness import SuiteConfig, run_suite  # noqa: E402
from lukas_vcf.vcf import tamper_term  # noqa: E402

from test_paths import SCALAR_MOMENTS  # noqa: E402

RESULTS = []


def record(number, title, budget, check):
    start = time.perf_counter()
    problems = check()
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < budget
    why = "" if ok else f"  <- {problems[:3] if problems else 'over budget'}"
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title} ({elapsed:.1f}s / {budget:.0f}s){why}"
    RESULTS.append(line)
    print(line)
    assert not problems, problems
    assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"


def failed(reports):
    return [str(r) for r in reports if not r.ok]


@pytest.fixture(scope="module", autouse=True)
def summary(request):
    yield
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    if reporter is not None and RESULTS:
        reporter.write_line("")
        for line in RESULTS:
            reporter.write_line(line)


# criteria ------------------------------------------------------------------------

def test_scalar_regression():
    def check():
        t = CoeffTable.symbolic(1)
        return [n for n, s in SCALAR_MOMENTS.items() if weight_polynomial(FamilySpec("D", 1, n, 0), t) != s]

    record(1, "scalar moments s_1..s_4", 1, check)


def test_paths_equal_operator_moments():
    def check():
        bad = []
        for p in (1, 2, 3):
            t = CoeffTable.symbolic(p)
            for q in range(3):
                cases = [("D", forward(q)), ("Dhat", reflected(q))]
                if q == 0:
                    cases.append(("P", TWO_SIDED))
                for family, kind in cases:
                    for j in range(p + 1):
                        for n in range(9):
                            if weight_polynomial(FamilySpec(family, p, n, j, q), t) != moment(kind, n, j, t):
                                bad.append((p, q, family, j, n))
        return bad

    record(2, "path weights equal Hessenberg moments (p<=3, q<=2, n<=8)", 120, check)


def test_resolvent_relations():
    def check():
        bad = []
        for p in (1, 2, 3):
            bad += failed(run_suite("theorem-A", SuiteConfig(p, N=10, mode="symbolic")))
        return bad

    record(3, "resolvent relations, symbolic to N=10 (p=1,2,3)", 120, check)


def test_two_sided_relations():
    def check():
        bad = []
        for p in (1, 2):
            bad += failed(run_suite("theorem-W", SuiteConfig(p, N=8, mode="symbolic")))
        bad += failed(run_suite("theorem-W", SuiteConfig(3, N=10, mode="numeric", tables=20)))
        return bad

    record(4, "two-sided relations (symbolic p<=2 N=8; 20 tables p=3 N=10)", 180, check)


def test_genetic_sums():
    def check():
        bad = []
        for p in (1, 2, 3):
            t = CoeffTable.symbolic(p, bidiagonal=True)
            for fam, path_family, qs in (("R", "R", [0]), ("S", "S", [0, 1, 2]), ("T", "Shat", [0, 1, 2])):
                for q in qs:
                    for j in range(p + 1):
                        for m in range(4):
                            spec = FamilySpec(path_family, p, m * (p + 1) + j, j, q)
                            if genetic_sum(fam, p, m, j, q, t) != weight_polynomial(spec, t):
                                bad.append((fam, p, q, j, m))
        return bad

    record(5, "nested-sum formulas equal path enumeration (p<=3, m<=3)", 60, check)


def test_counting():
    def check():
        bad = []
        for p in (1, 2, 3):
            for j in range(p + 1):
                for m in range(5):
                    n = m * (p + 1) + j
                    total = comb(n, m)
                    dyck = total * (j + 1) // (p * m + j + 1)
                    for fam, want in (("R", total), ("S", dyck)):
                        spec = FamilySpec(fam, p, n, j)
                        walked = sum(1 for _ in enumerate_paths(spec))
                        if not walked == count(spec) == want:
                            bad.append((fam, p, j, m, walked, count(spec), want))
        if count(FamilySpec("R", 2, 6, 0)) != 15 or count(FamilySpec("S", 2, 6, 0)) != 3:
            bad.append("p=2, m=2, j=0")
        return bad

    record(6, "path counts and closed forms (p<=3, m<=4)", 60, check)


def test_finite_fraction():
    def check():
        bad = []
        for p in (1, 2):
            t = CoeffTable.symbolic(p)
            for n in range(1, 6):
                bad += failed(verify_kalyagin(n, 10, t))
        for seed in range(5):
            t = CoeffTable.random(3, seed, (-60, 40))
            for n in range(1, 6):
                bad += failed(verify_kalyagin(n, 10, t))
        return bad

    record(7, "finite continued fraction with and without tail (n<=5, N=10)", 180, check)


def test_hermite_pade_order():
    def check():
        bad = []
        for p in (1, 2, 3):
            bad += failed(run_suite("hp-order", SuiteConfig(p, N=8, mode="numeric", tables=20)))
        return bad

    record(8, "Hermite-Pade defect order (n<=8, 20 tables, p<=3)", 60, check)


def test_reflection():
    def check():
        bad = []
        for p in (1, 2, 3):
            t = CoeffTable.symbolic(p, bidiagonal=True)
            for j in range(p + 1):
                for n in range(11):
                    lhs = weight_polynomial(FamilySpec("Shat", p, n, j), t)
                    rhs = weight_polynomial(FamilySpec("S", p, n, j), t).substitute(reflect_var)
                    if lhs != rhs:
                        bad.append((p, j, n))
        return bad

    record(9, "reflected Dyck weights equal substituted Dyck weights (n<=10)", 30, check)


def test_negative_controls():
    def check():
        bad = []
        # every component of every stage touched by the tail recursion at k = 0..2
        p, N = 2, 8
        t = CoeffTable.symbolic(p)
        for k in range(3):
            term = cf_term(k + 1, t)
            for part in ("c", "d"):
                for comp in range(p):
                    r = verify_lemma_lft(k, N, t, tamper_term(term, comp, part))
                    if r.ok or not r.failures or r.failures[0].exponent > N:
                        bad.append(("stage", k + 1, part, comp))
        # a single weight in each resolvent series
        for j in range(p):
            for e in range(j + 1, 9):
                reports = run_suite("theorem-A", SuiteConfig(p, N=8, mode="numeric", seed=3, tamper=(j, e)))
                located = [f for r in reports for f in r.failures if (f.component, f.exponent) == (j, e)]
                if not located:
                    bad.append(("weight", j, e))
        return bad

    record(10, "tampered stage or weight fails at a located exponent", 30, check)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
