import pytest

from knotforge.ajpipeline import aj_verify, degree_survey, match_up_to_m, riley_irreducible, survey_riley
from knotforge.cjones import CatalogError, ColoredJonesTable
from knotforge.cjones.table import CACHE_ENV
from knotforge.exactalg import LaurentPoly, MultiPoly
from knotforge.twobridge import TwoBridgeKnot

ML = ("m", "l")


def P(text):
    return MultiPoly.parse(text).with_vars(ML)


def test_match_up_to_m():
    target = P("m^6*l + 1")
    assert match_up_to_m(P("(m^4 - 1)*(m^6*l + 1)"), target) == (0, 1)
    # monomials and signs are m-only factors and are stripped as well
    assert match_up_to_m(P("-m^2*(m^6*l + 1)"), target) == (0, 1)
    assert match_up_to_m(P("m^6 + l"), target) is None


def test_trefoil_matches(trefoil_table):
    report = aj_verify(TwoBridgeKnot(3, 1), table=trefoil_table)
    assert report.status == "match" and report.match
    assert report.riley_irreducible and report.sufficient_condition_met
    assert report.operator_caps == (2, 5, 11)


def test_figure_eight_matches_with_room(figure_eight_table):
    report = aj_verify(TwoBridgeKnot(5, 3), caps=(4, 8, 24), table=figure_eight_table)
    assert report.status == "match" and report.m_shift is not None and report.sign in (1, -1)


def test_figure_eight_default_caps_inconclusive(figure_eight_table):
    report = aj_verify(TwoBridgeKnot(5, 3), table=figure_eight_table)
    assert report.status == "inconclusive" and not report.match
    assert report.notes


def test_corrupted_table_never_matches(trefoil_table):
    entries = dict(trefoil_table.entries)
    entries[6] = entries[6] + LaurentPoly({2: 1})
    report = aj_verify(TwoBridgeKnot(3, 1), table=ColoredJonesTable("bad", entries))
    assert report.status in ("inconclusive", "mismatch") and not report.match


def test_wrong_braid_is_a_mismatch(trefoil_table):
    # the trefoil table paired with the 5_1 A-polynomial
    report = aj_verify(TwoBridgeKnot(5, 1), table=trefoil_table)
    assert report.status == "mismatch"


def test_warm_and_cold_cache_agree(tmp_path, monkeypatch):
    monkeypatch.delenv(CACHE_ENV, raising=False)
    K = TwoBridgeKnot(3, 1)
    cold = aj_verify(K, N=11, caps=(2, 6, 12), cache=str(tmp_path))
    warm = aj_verify(K, N=11, caps=(2, 6, 12), cache=str(tmp_path))
    assert cold.to_json(with_timings=False) == warm.to_json(with_timings=False)
    assert "timings" in cold.to_json()


def test_unknown_knot_is_rejected():
    with pytest.raises(CatalogError):
        aj_verify(TwoBridgeKnot(23, 7))


def test_riley_survey_small():
    rows = survey_riley(15)
    by_pq = {(r.p, r.q): r for r in rows}
    assert all(r.irreducible for r in rows if r.asserted)
    assert not by_pq[(9, 1)].irreducible and not by_pq[(9, 1)].asserted
    assert all(r.degree == (r.p - 1) // 2 for r in rows)
    assert riley_irreducible(TwoBridgeKnot(13, 5))
    with pytest.raises(ValueError):
        survey_riley(61)


def test_degree_survey():
    rows = degree_survey(13)
    assert {(r.p, r.q) for r in rows} == {(5, 3), (7, 3), (9, 5), (11, 3), (13, 5)}
    assert all(r.passed for r in rows)
    with pytest.raises(ValueError):
        degree_survey(27)
