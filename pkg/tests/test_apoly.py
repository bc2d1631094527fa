import pytest

from knotforge.apoly import (a_polynomial, balanced_check, degree_bound_check, eliminant, epsilon1_action,
                             in_Z_m2_l, is_balanced, is_balanced_irreducible, longitude_eigenvalue,
                             longitude_residual, longitude_word, mirror_transform, sigma_action)
from knotforge.exactalg import MultiPoly
from knotforge.twobridge import TwoBridgeKnot, riley_roots

ML = ("m", "l")


def P(text):
    return MultiPoly.parse(text).with_vars(ML)


FIGURE_EIGHT_AHAT = P("m^8*l - m^6*l - m^4*l^2 - 2*m^4*l - m^4 - m^2*l + l")


def test_trefoil_and_figure_eight():
    assert a_polynomial(TwoBridgeKnot(3, 1)).Ahat.with_vars(ML) == P("m^6*l + 1")
    report = a_polynomial(TwoBridgeKnot(5, 3))
    assert report.Ahat.with_vars(ML) == FIGURE_EIGHT_AHAT
    assert report.A.with_vars(ML) == (FIGURE_EIGHT_AHAT * P("l - 1"))
    assert (report.m_degree, report.l_degree) == (8, 2)


def test_eliminant_routes_agree():
    for K in (TwoBridgeKnot(5, 3), TwoBridgeKnot(7, 3)):
        a = eliminant(K, "prs")
        b = eliminant(K, "sylvester")
        assert a.primitive() in (b.primitive(), -b.primitive())


def test_longitude_word_shape():
    from knotforge.twobridge import epsilon_sequence, relator_word

    for K in (TwoBridgeKnot(3, 1), TwoBridgeKnot(5, 3), TwoBridgeKnot(7, 3)):
        w = relator_word(K)
        lam = longitude_word(K)
        assert lam[:len(w)] == w[::-1] and lam[len(w):2 * len(w)] == w
        twist = -2 * sum(epsilon_sequence(K))
        assert lam[2 * len(w):] == ([("a", twist)] if twist else [])
        assert longitude_eigenvalue(K).as_equation()


def test_longitude_commutes_with_meridian_numerically():
    for K in (TwoBridgeKnot(5, 3), TwoBridgeKnot(7, 3)):
        for u in riley_roots(K, 0.7 + 0.4j):
            assert longitude_residual(K, 0.7 + 0.4j, u) < 1e-9


def test_mirror_rule():
    for K in (TwoBridgeKnot(3, 1), TwoBridgeKnot(7, 3)):
        A = a_polynomial(K).A
        Am = a_polynomial(K.mirror()).A
        assert Am.with_vars(ML).primitive() in (mirror_transform(A).with_vars(ML).primitive(),
                                                 -mirror_transform(A).with_vars(ML).primitive())


def test_symmetries_of_a_polynomial():
    for K in (TwoBridgeKnot(3, 1), TwoBridgeKnot(5, 3), TwoBridgeKnot(7, 3)):
        A = a_polynomial(K).A
        assert in_Z_m2_l(A)
        assert balanced_check(A) is not None
        assert epsilon1_action(A) == A


def test_balanced_check_certificate():
    from fractions import Fraction

    for A in (P("m^6*l + 1"), FIGURE_EIGHT_AHAT, FIGURE_EIGHT_AHAT * P("l - 1")):
        delta, a, b = balanced_check(A)
        for m0, l0 in ((Fraction(2), Fraction(3)), (Fraction(-5, 7), Fraction(11, 3))):
            lhs = A.evaluate({"m": 1 / m0, "l": 1 / l0})
            assert lhs == delta * m0 ** a * l0 ** b * A.evaluate({"m": m0, "l": l0})
        assert sigma_action(sigma_action(A)) == A
    assert not is_balanced(P("m^2*l + 2"))
    assert balanced_check(P("m^2*l + 2")) is None


def test_balanced_irreducibility():
    assert is_balanced_irreducible(FIGURE_EIGHT_AHAT, "Z[m^2,l]").irreducible
    # (m^2 l - 1)(m^2 - l) is balanced but each factor is balanced too
    split = is_balanced_irreducible(P("(m^2*l - 1)*(m^2 - l)"), "Z[m^2,l]")
    assert not split.irreducible and split.witness is not None
    with pytest.raises(ValueError):
        is_balanced_irreducible(P("m^2*l + 2"))
    with pytest.raises(ValueError):
        is_balanced_irreducible(FIGURE_EIGHT_AHAT, "Z[m]")


def test_degree_bounds():
    check = degree_bound_check(TwoBridgeKnot(5, 3))
    assert (check.m_degree, check.l_degree, check.candidate_d) == (8, 2, [2])
    assert check.passed
    check = degree_bound_check(TwoBridgeKnot(7, 3))
    assert check.l_degree >= 3 and 3 in check.candidate_d and check.passed
    assert degree_bound_check(TwoBridgeKnot(5, 1)).skipped
