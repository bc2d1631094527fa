import json
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from knotforge.cjones import (BraidWord, CatalogError, ColoredJonesTable, CrossingBudgetError, braiding,
                              colored_jones, colored_jones_exact, determinant, gaussian_binomial, jones_table,
                              kauffman_bracket_jones, load_catalog, lookup)
from knotforge.cjones.catalog import burau_alexander_at, two_bridge_alexander_at, validate_entry
from knotforge.cjones.rmatrix import apply_on_tensor
from knotforge.cjones.table import CACHE_ENV, cache_dir
from knotforge.exactalg import LaurentPoly, quantum_integer
from knotforge.twobridge import TwoBridgeKnot

from conftest import FIGURE_EIGHT, TREFOIL, UNKNOT

FIVE_TWO = BraidWord(3, (1, 1, 1, 2, -1, 2))


def bracket_symbol(x):
    """``t^{2x} - t^{-2x}``"""
    return LaurentPoly({2 * x: 1, -2 * x: -1})


def cyclotomic_sum(n, weight):
    # J_n / [n] = sum_k weight(k) prod_{j=1}^k {n+j}{n-j}
    total = LaurentPoly({})
    prod_ = LaurentPoly({0: 1})
    for k in range(n):
        if k:
            prod_ = prod_ * bracket_symbol(n + k) * bracket_symbol(n - k)
        total = total + weight(k) * prod_
    return total * quantum_integer(n)


def figure_eight_formula(n):
    return cyclotomic_sum(n, lambda k: LaurentPoly({0: 1}))


def trefoil_formula(n):
    # q = t^4 and q^{k(k+3)/2} = t^{2k(k+3)}
    return cyclotomic_sum(n, lambda k: LaurentPoly({2 * k * (k + 3): (-1) ** k}))


def knot_braids(strands=3, max_len=6):
    letters = st.sampled_from([x for i in range(1, strands) for x in (i, -i)])
    return st.lists(letters, min_size=1, max_size=max_len).map(lambda w: BraidWord(strands, w)).filter(
        lambda b: b.is_knot())


# ---------------------------------------------------------------------------
# braid words


def test_braid_parse_and_properties():
    b = BraidWord.parse("1,-2, 1 -2", 3)
    assert b == FIGURE_EIGHT and b.writhe == 0 and b.is_knot()
    assert BraidWord(2, (1, 1)).components() == 2
    assert b.mirror().letters == (-1, 2, -1, 2)
    assert b.rotate().letters == (-2, 1, -2, 1)
    assert b.stabilize().strands == 4
    with pytest.raises(ValueError):
        BraidWord.parse("1,x", 3)
    with pytest.raises(ValueError):
        BraidWord(2, (2,))


# ---------------------------------------------------------------------------
# the braiding


def test_gaussian_binomial_values():
    assert gaussian_binomial(4, 2) == LaurentPoly({8: 1, 4: 1, 0: 2, -4: 1, -8: 1})
    for a in range(1, 6):
        assert gaussian_binomial(a, 1) == quantum_integer(a)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_gaussian_binomial_is_palindromic(n):
    for a in range(n + 4):
        for k in range(a + 1):
            g = gaussian_binomial(a, k)
            assert g == g.invert_variable()


def _matrix_of(word, n, strands=3):
    out = {}
    for state in product(range(n), repeat=strands):
        vec = {state: LaurentPoly({0: 1})}
        for x in word:
            vec = apply_on_tensor(vec, x, n)
        out[state] = vec
    return out


@pytest.mark.parametrize("n", [2, 3])
def test_yang_baxter(n):
    assert _matrix_of((1, 2, 1), n) == _matrix_of((2, 1, 2), n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_braiding_inverse(n):
    for state, vec in _matrix_of((1, -1), n, 2).items():
        assert vec == {state: LaurentPoly({0: 1})}


@pytest.mark.parametrize("n", [2, 3])
def test_braiding_preserves_weight(n):
    for (i, j), terms in braiding(n).items():
        for (a, b), _ in terms:
            assert a + b == i + j


# ---------------------------------------------------------------------------
# invariants


@pytest.mark.parametrize("n", range(1, 8))
def test_unknot_is_quantum_integer(n):
    assert colored_jones(UNKNOT, n) == quantum_integer(n)
    assert colored_jones(BraidWord(2, (1,)), n) == quantum_integer(n)
    assert colored_jones(BraidWord(3, (1, -2)), n) == quantum_integer(n)


def test_color_one_is_one():
    assert colored_jones(TREFOIL, 1) == LaurentPoly({0: 1})


@pytest.mark.parametrize("n", range(1, 7))
def test_cyclotomic_formulas(n):
    assert colored_jones(FIGURE_EIGHT, n) == figure_eight_formula(n)
    J = colored_jones(TREFOIL, n)
    assert J in (trefoil_formula(n), trefoil_formula(n).invert_variable())


@pytest.mark.parametrize("n", [2, 3, 4])
def test_state_sum_matches_exact(n):
    for braid in (TREFOIL, FIGURE_EIGHT, FIVE_TWO):
        assert colored_jones(braid, n) == colored_jones_exact(braid, n)


@settings(max_examples=15, deadline=None)
@given(knot_braids())
def test_modular_and_exact_agree_random(braid):
    assert colored_jones(braid, 2) == colored_jones_exact(braid, 2)


@settings(max_examples=15, deadline=None)
@given(knot_braids(), st.integers(0, 5))
def test_conjugation_invariance(braid, k):
    assert colored_jones(braid.rotate(k), 3) == colored_jones(braid, 3)


@settings(max_examples=10, deadline=None)
@given(knot_braids(), st.booleans())
def test_markov_stabilization(braid, positive):
    assert colored_jones(braid.stabilize(positive), 3) == colored_jones(braid, 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_mirror_inverts_variable(n):
    for braid in (TREFOIL, FIVE_TWO):
        assert colored_jones(braid.mirror(), n) == colored_jones(braid, n).invert_variable()


@pytest.mark.parametrize("n", range(1, 7))
def test_figure_eight_is_palindromic(n):
    J = colored_jones(FIGURE_EIGHT, n)
    assert J == J.invert_variable()


@settings(max_examples=10, deadline=None)
@given(knot_braids(), st.integers(1, 4))
def test_integrality(braid, n):
    J = colored_jones(braid, n)
    assert all(isinstance(c, int) for _, c in J.sorted_terms())
    assert J.exponents_in_class((2 * n - 2) % 4, 4)


def test_non_knot_is_rejected():
    with pytest.raises(ValueError):
        colored_jones(BraidWord(2, (1, 1)), 2)


# ---------------------------------------------------------------------------
# Kauffman bracket oracle


@pytest.mark.parametrize("braid", [TREFOIL, FIGURE_EIGHT, FIVE_TWO])
def test_bracket_oracle(braid):
    assert colored_jones(braid, 2) == quantum_integer(2) * kauffman_bracket_jones(braid)


def test_bracket_budget():
    with pytest.raises(CrossingBudgetError):
        kauffman_bracket_jones(BraidWord(2, (1,) * 25))


def test_determinants():
    assert determinant(TREFOIL) == 3
    assert determinant(FIGURE_EIGHT) == 5
    assert determinant(FIVE_TWO) == 7


# ---------------------------------------------------------------------------
# catalog


def test_catalog_entries_validate():
    entries = load_catalog()
    assert len(entries) >= 8
    for entry in entries:
        validate_entry(entry)
        assert determinant(entry.braid) == entry.knot.p


def test_alexander_routes_agree():
    for entry in load_catalog():
        for t in (3, 7):
            ratio = burau_alexander_at(entry.braid, t) / two_bridge_alexander_at(entry.knot, t)
            # equal up to a unit +-t^k
            assert any(ratio in (Fraction(t) ** k, -Fraction(t) ** k) for k in range(-12, 13))


def test_lookup():
    assert lookup(TwoBridgeKnot(5, 3)).braid == FIGURE_EIGHT
    assert lookup(TwoBridgeKnot(3, 1).mirror()).braid == TREFOIL
    with pytest.raises(CatalogError):
        lookup(TwoBridgeKnot(23, 5))


# ---------------------------------------------------------------------------
# tables and cache


def test_table_conventions(unknot_table):
    assert unknot_table[0] == LaurentPoly({})
    assert unknot_table[-3] == -quantum_integer(3)
    assert unknot_table.N == 8
    assert 9 not in unknot_table
    with pytest.raises(KeyError):
        unknot_table[9]
    back = ColoredJonesTable.from_json(json.loads(json.dumps(unknot_table.to_json())))
    assert back == unknot_table
    assert unknot_table.truncated(3).N == 3


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.delenv(CACHE_ENV, raising=False)
    cold = jones_table(FIGURE_EIGHT, 4, str(tmp_path))
    files = sorted((tmp_path / "jones").iterdir())
    assert len(files) == 4
    warm = jones_table(FIGURE_EIGHT, 4, str(tmp_path))
    assert warm == cold
    # a corrupt entry is recomputed, not trusted
    files[0].write_text("{not json")
    assert jones_table(FIGURE_EIGHT, 4, str(tmp_path)) == cold


def test_cache_environment_wins(tmp_path, monkeypatch):
    env_dir, explicit = tmp_path / "env", tmp_path / "explicit"
    monkeypatch.setenv(CACHE_ENV, str(env_dir))
    assert cache_dir(str(explicit)) == env_dir
    jones_table(TREFOIL, 2, str(explicit))
    assert (env_dir / "jones").is_dir() and not explicit.exists()
    monkeypatch.delenv(CACHE_ENV)
    assert cache_dir(None) is None
