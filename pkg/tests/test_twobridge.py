from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from knotforge.exactalg import factor_biv_Q, is_squarefree
from knotforge.twobridge import (TwoBridgeKnot, dihedral_locus, epsilon_sequence, normalize, parabolic_polynomial,
                                 relator_residual, relator_word, riley_polynomial, riley_roots, verify_representation)


def knots(p_max=15):
    pairs = [(p, q) for p in range(3, p_max + 1, 2) for q in range(1, p - 1, 2) if gcd(p, q) == 1]
    return st.sampled_from(pairs).map(lambda pq: TwoBridgeKnot(*pq))


# independent evaluation: 2x2 integer matrices, no polynomial arithmetic


def _mat_mul(x, y):
    return [[x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]],
            [x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]]]


def _gen(name, sign, s, u):
    if name == "a":
        m = [[s, 1], [0, 1]]
        inv = [[Fraction(1) / s, -Fraction(1) / s], [0, 1]]
    else:
        m = [[s, 0], [-s * u, 1]]
        inv = [[Fraction(1) / s, 0], [u, 1]]
    return m if sign > 0 else inv


def phi_by_evaluation(p, q, s, u):
    eps = [(-1) ** (i * q // p) for i in range(1, p)]
    w = [[1, 0], [0, 1]]
    for i, e in enumerate(eps):
        w = _mat_mul(w, _gen("a" if i % 2 == 0 else "b", e, s, u))
    return w[0][0] + (1 - s) * w[0][1]


def test_rejects_bad_parameters():
    for p, q in ((4, 1), (5, 2), (9, 3), (5, 5), (1, 1)):
        with pytest.raises(ValueError):
            TwoBridgeKnot(p, q)


def test_normalize_moves_q_into_window():
    assert normalize(5, 3).knot == TwoBridgeKnot(5, 3)
    assert normalize(5, 3).canonical_input
    assert normalize(7, 10).knot == TwoBridgeKnot(7, 3)
    m = normalize(7, 4).knot
    assert m.mirrored and m.q == 3 and m.signed_q == -3
    assert normalize(5, -3).knot == TwoBridgeKnot(5, 3).mirror()


def test_equivalence_and_mirror_classes():
    # b(p,q) = b(p,q') when q q' = 1 mod p
    assert TwoBridgeKnot(7, 5).is_equivalent(TwoBridgeKnot(7, 3))
    assert TwoBridgeKnot(5, 3).is_mirror_of(TwoBridgeKnot(5, 3))   # amphichiral
    assert not TwoBridgeKnot(3, 1).is_equivalent(TwoBridgeKnot(3, 1).mirror())


def test_epsilon_sequence_is_palindromic_and_mirror_flips():
    for p, q in ((5, 3), (7, 3), (13, 5)):
        K = TwoBridgeKnot(p, q)
        eps = epsilon_sequence(K)
        assert eps == eps[::-1]
        assert epsilon_sequence(K.mirror()) == [-e for e in eps]
        assert len(relator_word(K)) == p - 1


def test_known_riley_polynomials():
    assert str(riley_polynomial(TwoBridgeKnot(3, 1)).phi) == "s*u - s^2 + s - 1"
    phi = riley_polynomial(TwoBridgeKnot(5, 3))
    assert (phi.u_degree, phi.s_degree) == (2, 2)


@settings(max_examples=30, deadline=None)
@given(knots(13), st.integers(2, 5), st.integers(-4, 4))
def test_riley_matches_matrix_evaluation(K, s, u):
    phi = riley_polynomial(K).phi
    direct = phi_by_evaluation(K.p, K.q, Fraction(s), Fraction(u))
    value = phi.evaluate({"s": s, "u": u})
    # phi is the primitive part with the s-power stripped: compare zero sets
    assert (value == 0) == (direct == 0)
    if value != 0:
        ratio = Fraction(direct) / Fraction(value)
        ref = Fraction(phi_by_evaluation(K.p, K.q, Fraction(s), Fraction(u + 7))) / Fraction(
            phi.evaluate({"s": s, "u": u + 7}))
        assert ratio == ref


@settings(max_examples=20, deadline=None)
@given(knots(15))
def test_u_degree(K):
    assert riley_polynomial(K).u_degree == (K.p - 1) // 2


def test_riley_irreducible_for_small_primes():
    for p in (3, 5, 7, 11):
        for q in range(1, p - 1, 2):
            f = factor_biv_Q(riley_polynomial(TwoBridgeKnot(p, q)).phi)
            assert len(f) == 1 and f[0][1] == 1


def test_riley_reducible_example():
    # composite p: the torus knot b(9,1) splits
    f = factor_biv_Q(riley_polynomial(TwoBridgeKnot(9, 1)).phi)
    assert len(f) > 1


def test_numeric_roots_give_representations():
    K = TwoBridgeKnot(7, 3)
    roots = riley_roots(K, 1.3 + 0.2j)
    assert len(roots) == 3
    for u in roots:
        assert verify_representation(K, 1.3 + 0.2j, u).ok
    assert not verify_representation(K, 1.3 + 0.2j, 0.5).ok
    assert relator_residual(K, 2, 0.5) > 1e-3


def test_parabolic_and_dihedral_loci():
    K = TwoBridgeKnot(5, 3)
    assert parabolic_polynomial(K).degree("u") == 2
    D = dihedral_locus(K)
    assert D.degree("u") == 2 and is_squarefree(D)
