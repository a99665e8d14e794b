import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lukas_vcf import CoeffTable, RingMismatchError, Var, WeightPoly, WindowError, reflect_var
from lukas_vcf.algebra import NUMERIC, SYMBOLIC, poly_add, poly_eval, poly_mul, poly_substitute

from conftest import a


# strategies -----------------------------------------------------------------

variables = st.builds(Var, st.integers(0, 2), st.integers(-3, 3))
monomials = st.lists(st.tuples(variables, st.integers(1, 3)), max_size=3)


@st.composite
def polys(draw, max_terms=4):
    out = WeightPoly.zero()
    for _ in range(draw(st.integers(0, max_terms))):
        coeff = draw(st.integers(-5, 5))
        term = WeightPoly.const(coeff)
        for v, e in draw(monomials):
            term = term * WeightPoly.var(v.k, v.n) ** e
        out = out + term
    return out


def small_table():
    values = {(k, n): Fraction((3 * k + 5 * n) % 7 - 3 or 1, 1 + (k + n) % 3) for k in range(3) for n in range(-3, 4)}
    return CoeffTable(2, "numeric", values, (-3, 3))


# examples ----------------------------------------------------------------------

def test_add_disjoint_monomials():
    s = poly_add(a(0, 0), a(1, 0))
    assert len(s) == 2
    assert str(s) in ("a_0^(0) + a_0^(1)", "a_0^(1) + a_0^(0)")


def test_add_cancels():
    assert poly_add(a(0, 0), WeightPoly.const(-1) * a(0, 0)) == WeightPoly.zero()


def test_add_zero_is_identity():
    assert a(0, 0) + 0 == a(0, 0)


def test_mul_distinct_variables():
    prod = poly_mul(a(1, 0), a(1, 1))
    assert prod == WeightPoly.monomial(((Var(1, 0), 1), (Var(1, 1), 1)))


def test_difference_of_squares():
    x, y = a(0, 0), a(0, 1)
    assert (x + y) * (x - y) == x ** 2 - y ** 2


def test_mul_by_one():
    s2 = a(0, 0) ** 2 + a(1, 0)
    assert s2 * 1 == s2


def test_identity_substitution():
    f = a(0, 0) ** 2 + a(1, 0) * a(1, 2)
    assert poly_substitute(f, {}) == f
    assert f.substitute(lambda v: v) == f


def test_substitution_must_be_injective():
    f = a(2, 0) + a(2, 1)
    with pytest.raises(ValueError):
        f.substitute({Var(2, 1): Var(2, 0)})


def test_reflect_var_on_top_diagonal():
    # a_k -> a_{-p-k} on the p-th diagonal, p = 2
    assert reflect_var(Var(2, 0)) == Var(2, -2)
    assert reflect_var(Var(2, 1)) == Var(2, -3)
    term = a(2, 0) ** 2 * a(2, 1) ** 3
    assert term.substitute(reflect_var) == a(2, -2) ** 2 * a(2, -3) ** 3


def test_evaluate_moment_two():
    table = CoeffTable(1, "numeric", {(0, 0): 2, (1, 0): 3}, (0, 0))
    assert poly_eval(a(0, 0) ** 2 + a(1, 0), table) == 7


def test_evaluate_zero():
    assert WeightPoly.zero().evaluate(small_table()) == 0


def test_evaluate_outside_window():
    with pytest.raises(WindowError):
        a(0, 9).evaluate(small_table())


def test_fraction_is_rejected_by_symbolic_ring():
    with pytest.raises(RingMismatchError):
        a(0, 0) + Fraction(1, 2)
    with pytest.raises(RingMismatchError):
        SYMBOLIC.check(Fraction(1))
    with pytest.raises(RingMismatchError):
        NUMERIC.check(a(0, 0))


def test_json_roundtrip_and_order():
    f = 3 * a(1, -2) * a(0, 0) ** 2 - a(2, 1) + 5
    data = f.to_json()
    assert WeightPoly.from_json(json.loads(json.dumps(data))) == f
    assert data[0] == {"coeff": "5", "vars": []}


def test_table_json_roundtrip():
    t = CoeffTable.random(2, seed=4, window=(-2, 3))
    back = CoeffTable.from_json(json.dumps(t.to_json()))
    assert back.to_json() == t.to_json()
    assert back.value(1, -2) == t.value(1, -2)


def test_random_table_is_seeded():
    t1 = CoeffTable.random(3, seed=11, window=(-5, 5))
    t2 = CoeffTable.random(3, seed=11, window=(-5, 5))
    assert t1.values == t2.values
    assert all(v != 0 and -9 <= v <= 9 and v.denominator == 1 for v in t1.values.values())


def test_bidiagonal_tables_zero_lower_diagonals():
    sym = CoeffTable.symbolic(2, bidiagonal=True)
    assert sym.value(0, 3) == 0 and sym.value(1, -1) == 0
    assert sym.value(2, -1) == a(2, -1)
    num = CoeffTable.random(2, seed=1, window=(0, 4), bidiagonal=True)
    assert num.value(1, 2) == 0 and num.value(2, 2) != 0


def test_numeric_table_rejects_holes():
    with pytest.raises(ValueError):
        CoeffTable(1, "numeric", {(0, 0): 1}, (0, 0))


# ring laws ------------------------------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == WeightPoly.zero()


@settings(max_examples=60, deadline=None)
@given(polys(), polys())
def test_canonical_form(x, y):
    assert poly_add(x, poly_mul(y, WeightPoly.zero())) == x
    assert hash(x + y) == hash(y + x)


@settings(max_examples=60, deadline=None)
@given(polys(), polys())
def test_substitution_is_homomorphism(x, y):
    assert (x * y).substitute(reflect_var) == x.substitute(reflect_var) * y.substitute(reflect_var)
    assert (x + y).substitute(reflect_var) == x.substitute(reflect_var) + y.substitute(reflect_var)


@settings(max_examples=60, deadline=None)
@given(polys(), polys())
def test_evaluation_is_homomorphism(x, y):
    t = small_table()
    assert (x + y).evaluate(t) == x.evaluate(t) + y.evaluate(t)
    assert (x * y).evaluate(t) == x.evaluate(t) * y.evaluate(t)
