from fractions import Fraction

import pytest

from lukas_vcf import (
    CoeffTable,
    Polynomial,
    ValidityError,
    akv_expansion,
    cf_term,
    char_polys,
    convergent_polys,
    eval_finite_cf,
    series_from_family,
    tail_vector,
    verify_akv,
    verify_bidiagonal,
    verify_kalyagin,
    verify_lemma_lft,
    verify_theorem_A,
    verify_theorem_W,
)
from lukas_vcf.algebra import SYMBOLIC
from lukas_vcf.vcf import compare_vectors, tamper_term

from conftest import a


def zp():
    return Polynomial.z(SYMBOLIC)


def const(x):
    return Polynomial.constant(SYMBOLIC, x)


def zero_poly():
    return Polynomial(SYMBOLIC, [])


def all_pass(reports):
    bad = [str(r) for r in reports if not r.ok]
    assert not bad, bad


def fractional_table(p, window):
    values = {
        (k, n): Fraction((7 * k + 3 * n) % 11 - 5 or 2, 1 + (k * n) % 4)
        for k in range(p + 1)
        for n in range(window[0], window[1] + 1)
    }
    return CoeffTable(p, "numeric", values, window)


# stages ----------------------------------------------------------------------------

def test_first_stage(p):
    term = cf_term(1, CoeffTable.symbolic(p))
    assert term.c == (1,) * p
    assert term.d == tuple([zero_poly()] * (p - 1) + [zp() - a(0, 0)])


def test_numerator_switch_after_p_stages(p):
    t = CoeffTable.symbolic(p)
    assert cf_term(p, t).c == (1,) * p
    assert cf_term(p + 1, t).c == (-a(p, 0),) + (1,) * (p - 1)
    assert cf_term(p + 3, t).c[0] == -a(p, 2)


def test_scalar_stage_two():
    term = cf_term(2, CoeffTable.symbolic(1))
    assert term.c == (-a(1, 0),)
    assert term.d == (zp() - a(0, 1),)


def test_stages_around_the_switch_p2():
    t = CoeffTable.symbolic(2)
    assert cf_term(2, t).d == (const(-a(1, 0)), zp() - a(0, 1))
    assert cf_term(3, t).d == (const(-a(1, 1)), zp() - a(0, 2))
    assert cf_term(3, t).c == (-a(2, 0), 1)


def test_stage_json():
    data = cf_term(3, CoeffTable.symbolic(2)).to_json()
    assert len(data["c"]) == 2 and len(data["d"]) == 2


# tails ---------------------------------------------------------------------------------

def test_tail_zero_is_resolvents(p):
    t = CoeffTable.symbolic(p)
    v0 = tail_vector(0, 6, t)
    for j in range(p):
        assert v0[j].agrees_with(series_from_family("A", j, 0, 6, t))


def test_tail_one_p2():
    t = CoeffTable.symbolic(2)
    A = lambda j: series_from_family("A", j, 1, 6, t)
    v1 = tail_vector(1, 6, t)
    assert v1[0].agrees_with(A(0))
    assert v1[1].agrees_with(-(A(0).scale(a(1, 0)) + A(1).scale(a(2, 0))))


def test_single_stage_gives_scalar_resolvent():
    t = CoeffTable.symbolic(1)
    out = eval_finite_cf([cf_term(1, t)], tail_vector(1, 8, t), 8)
    assert out[0].agrees_with(series_from_family("A", 0, 0, 8, t))


def test_convergent_is_char_poly_ratio(p):
    t = CoeffTable.symbolic(p)
    for n in range(1, 7):
        numer, denom = convergent_polys([cf_term(m, t) for m in range(1, n + 1)])
        pair = char_polys(n, t)
        assert denom == pair.q_n
        assert numer == tuple(pair.q_nk[k] for k in range(1, p + 1))


def test_exact_fraction_needs_N():
    with pytest.raises(ValueError):
        eval_finite_cf([cf_term(1, CoeffTable.symbolic(1))])


# identity suites ------------------------------------------------------------------------

def test_tail_recursion_symbolic(p):
    t = CoeffTable.symbolic(p)
    all_pass([verify_lemma_lft(k, 8, t) for k in range(2 * p + 3)])


def test_tail_recursion_scalar_is_three_term_relation():
    r = verify_lemma_lft(0, 10, CoeffTable.symbolic(1))
    assert r.ok and r.checked_to == 10


def test_tampered_stage_is_located():
    t = CoeffTable.symbolic(2)
    bad = tamper_term(cf_term(1, t), 1)
    r = verify_lemma_lft(0, 8, t, bad)
    assert not r.ok
    f = r.failures[0]
    assert f.component in (0, 1) and 1 <= f.exponent <= 8


def test_kalyagin_symbolic_small(p):
    t = CoeffTable.symbolic(p)
    for n in range(1, 4):
        all_pass(verify_kalyagin(n, 7, t))


def test_kalyagin_fractional_table():
    t = fractional_table(3, (-2, 30))
    for n in range(1, 6):
        all_pass(verify_kalyagin(n, 9, t))


def test_theorem_A_scalar():
    all_pass(verify_theorem_A(6, CoeffTable.symbolic(1)))


def test_first_moment_is_diagonal_entry(p):
    t = CoeffTable.symbolic(p)
    assert series_from_family("A", 0, 0, 3, t).coeff(2) == a(0, 0)


def test_theorem_A_numeric_tables(p):
    for seed in range(20):
        all_pass(verify_theorem_A(7, CoeffTable.random(p, seed, (-40, 40))))


def test_theorem_W_small():
    all_pass(verify_theorem_W(6, CoeffTable.symbolic(1)))
    all_pass(verify_theorem_W(6, CoeffTable.symbolic(2)))
    w0 = series_from_family("W", 0, 0, 3, CoeffTable.symbolic(2))
    assert w0.coeff(1) == 1


def test_theorem_W_fractional_table():
    all_pass(verify_theorem_W(7, fractional_table(2, (-30, 30))))


def test_bidiagonal_suite():
    all_pass(verify_bidiagonal(9, CoeffTable.symbolic(2, bidiagonal=True)))
    all_pass(verify_bidiagonal(9, CoeffTable.symbolic(1, bidiagonal=True)))
    all_pass(verify_bidiagonal(9, CoeffTable.random(3, 5, (-40, 40), bidiagonal=True)))


def test_bidiagonal_suite_rejects_full_tables():
    with pytest.raises(ValueError):
        verify_bidiagonal(5, CoeffTable.symbolic(2))


def test_tampered_weight_fails_at_that_exponent():
    reports = verify_theorem_A(8, CoeffTable.symbolic(2), tamper=(0, 5))
    first = reports[0]
    assert not first.ok
    assert [(f.component, f.exponent) for f in first.failures] == [(0, 5)]


# alternative expansion ----------------------------------------------------------------

def test_akv_depth_one_p2():
    t = CoeffTable.symbolic(2, bidiagonal=True)
    h = akv_expansion(1, 8, t)
    assert h[0].coeff(1) == 1 and h[0].valid_to >= 3
    assert all(h[0].coeff(e) == 0 for e in range(2, h[0].valid_to + 1))
    assert all(h[1].coeff(e) == 0 for e in range(0, h[1].valid_to + 1))


def test_akv_agreement_grows_with_depth(p):
    t = CoeffTable.symbolic(p, bidiagonal=True)
    reach = []
    for depth in range(1, 6):
        r = verify_akv(depth, 12, t)
        assert r.ok
        reach.append(r.checked_to)
    assert reach == sorted(reach) and reach[-1] > reach[0]


def test_akv_scalar_is_stieltjes_fraction():
    # S_0 = 1/(z - a_0/(z - a_1/(z - ...))) for p = 1
    t = CoeffTable.symbolic(1, bidiagonal=True)
    h = akv_expansion(4, 10, t)[0]
    z = Polynomial.z(SYMBOLIC).to_series()
    inner = z.invert(14)
    for k in (2, 1):
        inner = (z - inner.scale(a(1, k))).invert(14)
    s0 = (z - inner.scale(a(1, 0))).invert(14)
    assert h.mismatches(s0) == []


# reports ------------------------------------------------------------------------------

def test_report_json_shape():
    reports = verify_theorem_A(6, CoeffTable.symbolic(2), tamper=(1, 3))
    data = [r.to_json() for r in reports]
    assert set(data[0]) >= {"identity", "p", "N", "status", "failures"}
    bad = [d for d in data if d["status"] == "fail"]
    assert bad and {"component", "exponent"} <= set(bad[0]["failures"][0])


def test_comparison_refuses_short_ranges():
    t = CoeffTable.symbolic(1)
    s = series_from_family("A", 0, 0, 4, t)
    with pytest.raises(ValidityError):
        compare_vectors("x", [s], [s], 1, 6, require_to=6)


def test_tampered_higher_resolvent_keeps_its_index(p):
    if p == 1:
        return
    reports = verify_theorem_A(7, CoeffTable.symbolic(p), tamper=(p, p + 3))
    located = {(f.component, f.exponent) for r in reports for f in r.failures}
    assert located == {(p, p + 3)}
