import json

import pytest
from hypothesis import given, settings, strategies as st

from knotforge.cjones import ColoredJonesTable, colored_jones
from knotforge.exactalg import LaurentPoly, MultiPoly
from knotforge.qholo import (InsufficientTable, RecurrenceNotFound, RecurrenceOp, annihilates, apply_operator,
                             fit_window, guess_recurrence, minimal_recurrence, operator_balance_check, specialize,
                             specialize_and_quotient)

from conftest import FIGURE_EIGHT, TREFOIL

OP = ("t", "M")


def op_poly(text):
    return MultiPoly.parse(text).with_vars(OP)


TREFOIL_OP = [op_poly("-t^14*M^4 + t^2"),
              op_poly("-t^20*M^10 + t^8*M^6 + t^4*M^4 - 1"),
              op_poly("t^22*M^10 - t^18*M^6")]


def corrupted(table, n, bump):
    entries = dict(table.entries)
    entries[n] = entries[n] + bump
    return ColoredJonesTable(table.knot_id + "*", entries)


def test_fit_window():
    for order in (1, 2, 3):
        fit, hold = fit_window(12, order, 3)
        # the holdout uses the last table entries and never overlaps the fit
        assert fit[0] == 2 and fit[-1] + 1 == hold[0]
        assert len(hold) == 3 and hold[-1] + order == 12


def test_unknot_recurrence(unknot_table):
    op = minimal_recurrence(unknot_table, (2, 4, 4))
    assert op.dL == 1 and op.caps == (1, 1, 2)
    assert annihilates(op.coeffs, unknot_table, range(1, 8))
    witness = specialize_and_quotient(op)
    ml = ("m", "l")
    assert witness.alpha_at_minus1.with_vars(ml) == MultiPoly.parse("(m^2 - 1)*(l - 1)").with_vars(ml)
    # smaller caps have no solution
    assert guess_recurrence(unknot_table, 1, 1, 1) is None


def test_trefoil_operator(trefoil_table):
    op = minimal_recurrence(trefoil_table, (2, 6, 12))
    assert op.caps == (2, 5, 11)
    assert [a.with_vars(OP) for a in op.coeffs] == TREFOIL_OP
    assert operator_balance_check(op) == (1, 10, 10)


def test_trefoil_operator_predicts_new_values():
    # J_13 and J_14 were never seen by the fit
    op = RecurrenceOp(2, TREFOIL_OP, (2, 5, 11))
    table = {n: colored_jones(TREFOIL, n) for n in (11, 12, 13, 14)}
    assert not apply_operator(op, table, 11)
    assert not apply_operator(op, table, 12)


def test_trefoil_specialization(trefoil_table):
    op = RecurrenceOp(2, TREFOIL_OP, (2, 5, 11), (2, 7), (8, 10))
    ml = ("m", "l")
    assert specialize(op, 1) == specialize(op, -1)
    witness = specialize_and_quotient(op)
    expected = MultiPoly.parse("(m^4 - 1)*(m^6*l + 1)").with_vars(ml)
    assert witness.hat_alpha.with_vars(ml) == expected
    assert witness.hat_alpha.degree("l") == 1
    assert witness.balanced_cert is not None


def test_caps_below_minimum(trefoil_table):
    with pytest.raises(RecurrenceNotFound):
        minimal_recurrence(trefoil_table, (2, 4, 10))


def test_figure_eight_operator(figure_eight_table):
    op = minimal_recurrence(figure_eight_table, (4, 8, 24))
    assert op.caps == (3, 7, 22)
    assert annihilates(op.coeffs, figure_eight_table, range(1, 10))
    assert operator_balance_check(op) == (1, 21, 14)
    witness = specialize_and_quotient(op)
    assert witness.balanced_cert is not None


def test_holdout_catches_corruption(trefoil_table):
    bad = corrupted(trefoil_table, 10, LaurentPoly({0: 1}))
    with pytest.raises(RecurrenceNotFound, match="holdout failed"):
        minimal_recurrence(bad, (2, 5, 11))


def test_fit_corruption_leaves_no_operator(trefoil_table):
    bad = corrupted(trefoil_table, 5, LaurentPoly({2: 1}))
    with pytest.raises(RecurrenceNotFound):
        minimal_recurrence(bad, (2, 5, 11))


def test_short_table(unknot_table):
    with pytest.raises(InsufficientTable):
        guess_recurrence(unknot_table.truncated(3), 3, 1, 1)
    with pytest.raises(ValueError):
        minimal_recurrence(unknot_table, (1, 1, 2), holdout=2)


def test_operator_json_round_trip(trefoil_table):
    op = minimal_recurrence(trefoil_table, (2, 5, 11))
    back = RecurrenceOp.from_json(json.loads(json.dumps(op.to_json())))
    assert back.coeffs == op.coeffs and back.caps == op.caps and back.fit == op.fit
    assert back.as_poly() == op.as_poly()


@settings(max_examples=12, deadline=None)
@given(st.sampled_from([0, 2]), st.sampled_from([0, 2, 4]), st.integers(1, 3))
def test_recovers_first_order_sequences(a, b, c):
    # f(n) = t^{a n^2 + b n} (1 + c t^4) satisfies f(n+1) = t^{a+b} M^a f(n)
    table = ColoredJonesTable("synthetic", {
        n: LaurentPoly({a * n * n + b * n: 1, a * n * n + b * n + 4: c}) for n in range(1, 17)})
    op = minimal_recurrence(table, (1, 4, 8))
    assert op.dL == 1
    assert annihilates(op.coeffs, table, range(1, 16))
    ratio = op.coeffs[0].scale(-1)
    assert ratio == op.coeffs[1] * op_poly(f"t^{a + b}*M^{a}")
