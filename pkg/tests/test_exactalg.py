from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from knotforge.exactalg import (LaurentPoly, MultiPoly, factor_biv_Q, factor_uni_Q, is_squarefree, poly_gcd,
                                quantum_integer, resultant, squarefree_part)
from knotforge.exactalg import upoly
from knotforge.exactalg.factor import factor_mod_p, factor_squarefree_z
from knotforge.exactalg.sturm import count_real_roots

XY = ("x", "y")


def P(text):
    return MultiPoly.parse(text)


def biv(max_deg=3, max_terms=5, bound=6):
    term = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg))
    return st.dictionaries(term, st.integers(-bound, bound).filter(bool), max_size=max_terms).map(
        lambda d: MultiPoly(d, XY))


def nonconstant(max_deg=3):
    return biv(max_deg).filter(lambda p: not p.is_zero() and not p.is_constant())


def product_of(factors, vars):
    out = MultiPoly.constant(1, vars)
    for f, k in factors:
        out = out * f.with_vars(vars) ** k
    return out


# ---------------------------------------------------------------------------
# arithmetic


def test_parse_and_print_round_trip():
    p = P("x^2*y - 3*x + 1/2")
    assert p.terms[(2, 1)] == 1 and p.terms[(0, 0)] == Fraction(1, 2)
    assert P(str(p)) == p
    assert MultiPoly.from_json(p.to_json()) == p


def test_exact_division():
    a, b = P("x^2 + x*y + 1"), P("y - 2*x + 3")
    assert (a * b).exquo(b) == a
    with pytest.raises(ValueError):
        (a * b + 1).exquo(b)


@given(biv(), biv(), biv())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == MultiPoly({}, XY)


@given(biv(), nonconstant())
def test_exquo_inverts_multiplication(a, b):
    assert (a * b).exquo(b) == a


def test_laurent_basics():
    f = LaurentPoly({-2: 1, 3: 2})
    assert f.min_exp() == -2 and f.max_exp() == 3
    assert f.invert_variable() == LaurentPoly({2: 1, -3: 2})
    assert (f * f.shift(4)).exquo(f) == f.shift(4)
    assert quantum_integer(3) == LaurentPoly({4: 1, 0: 1, -4: 1})
    assert LaurentPoly.from_json(f.to_json()) == f


@given(st.integers(1, 12))
def test_quantum_integer_formula(n):
    # [n] (t^2 - t^-2) = t^(2n) - t^(-2n)
    lhs = quantum_integer(n) * LaurentPoly({2: 1, -2: -1})
    assert lhs == LaurentPoly({2 * n: 1, -2 * n: -1})


# ---------------------------------------------------------------------------
# resultants: the two routes must agree


def test_resultant_known_value():
    # Res_x(x^2 - y, x - 2) = 4 - y up to sign
    r = resultant(P("x^2 - y"), P("x - 2"), "x")
    assert r in (P("4 - y").with_vars(r.vars), P("y - 4").with_vars(r.vars))


@settings(max_examples=40, deadline=None)
@given(nonconstant(), nonconstant())
def test_resultant_routes_agree(a, b):
    if a.degree("x") == 0 or b.degree("x") == 0:
        return
    prs = resultant(a, b, "x", method="prs")
    syl = resultant(a, b, "x", method="sylvester")
    assert prs.with_vars(XY) == syl.with_vars(XY)


@settings(max_examples=30, deadline=None)
@given(nonconstant(2), nonconstant(2), nonconstant(2))
def test_resultant_multiplicative(a, b, c):
    if min(a.degree("x"), b.degree("x"), c.degree("x")) == 0:
        return
    lhs = resultant(a * b, c, "x").with_vars(XY)
    rhs = (resultant(a, c, "x") * resultant(b, c, "x")).with_vars(XY)
    assert lhs == rhs


def test_resultant_rejects_unknown_method():
    with pytest.raises(ValueError):
        resultant(P("x - y"), P("x + 1"), "x", method="magic")


# ---------------------------------------------------------------------------
# gcd and square-free parts


@settings(max_examples=40, deadline=None)
@given(nonconstant(2), biv(2), biv(2))
def test_gcd_contains_common_factor(g, a, b):
    if a.is_zero() or b.is_zero():
        return
    d = poly_gcd(a * g, b * g).with_vars(XY)
    assert g.divides(d)
    assert d.divides(a * g) and d.divides(b * g)


def test_squarefree_part():
    f = P("(x - y)^2 * (x + 1)").with_vars(XY)
    assert not is_squarefree(f)
    sf = squarefree_part(f).with_vars(XY)
    assert is_squarefree(sf)
    assert sf.primitive() in ((P("(x - y)*(x + 1)")).with_vars(XY), (-P("(x - y)*(x + 1)")).with_vars(XY))


# ---------------------------------------------------------------------------
# factorization


def test_factor_univariate_known():
    f = factor_uni_Q(P("x^4 - 1"))
    degrees = sorted(g.degree("x") for g, _ in f)
    assert degrees == [1, 1, 2]


def test_factor_swinnerton_dyer_is_irreducible():
    # x^4 - 10 x^2 + 1 splits modulo every prime but is irreducible over Q
    f = factor_uni_Q(P("x^4 - 10*x^2 + 1"))
    assert len(f) == 1 and f[0][1] == 1


def test_factor_mod_p_reconstructs():
    p = 101
    f = [1, 0, 0, 0, 1]  # 1 + x^4
    parts = factor_mod_p(f, p)
    prod = [1]
    for g in parts:
        prod = upoly.mul_mod(prod, g, p)
    assert upoly.mod(prod, p) == upoly.monic_mod(f, p)


def test_factor_squarefree_z_cyclotomic():
    parts = factor_squarefree_z([-1, 0, 0, 0, 0, 0, 1])  # x^6 - 1
    assert sorted(upoly.deg(g) for g in parts) == [1, 1, 2, 2]


def test_factor_bivariate_known():
    f = P("(x*y + 1)^2 * (x^2 - y^3) * (x + y + 2)")
    factors = factor_biv_Q(f)
    assert sorted((g.nterms(), k) for g, k in factors) == [(2, 1), (2, 2), (3, 1)]


@settings(max_examples=25, deadline=None)
@given(st.lists(nonconstant(2), min_size=1, max_size=3))
def test_factor_bivariate_product_property(parts):
    f = product_of([(g, 1) for g in parts], XY)
    factors = factor_biv_Q(f)
    back = product_of(factors, XY)
    assert back.primitive() in (f.primitive(), -f.primitive())
    assert len(factors) >= 1
    for g, _ in factors:
        assert len(factor_biv_Q(g)) == 1


def test_sturm_counts():
    assert count_real_roots([-2, 0, 1]) == 2   # x^2 - 2
    assert count_real_roots([1, 0, 1]) == 0    # x^2 + 1
