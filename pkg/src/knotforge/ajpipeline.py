"""End-to-end AJ checks and surveys over 2-bridge knots.

One side of the comparison is the A-polynomial from elimination; the other
is the recurrence of the colored Jones table specialized at ``t = -1``.  The
two are computed by disjoint code paths and compared as exact polynomials.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Tuple

from .apoly import a_polynomial, degree_bound_check, mirror_transform, remove_single_variable_factors
from .cjones import BraidWord, jones_table, lookup
from .cjones.table import ColoredJonesTable
from .exactalg.factor import factor_biv_Q
from .exactalg.poly import MultiPoly
from .qholo import (AJAssertionError, RecurrenceNotFound, minimal_recurrence, operator_balance_check,
                    specialize_and_quotient)
from .twobridge import TwoBridgeKnot, riley_polynomial

DEFAULT_N = 12
DEFAULT_CAPS = (6, 12, 12)
ML_VARS = ("m", "l")


@dataclass
class AJReport:
    """``status`` is ``match``, ``mismatch`` or ``inconclusive`` (no recurrence within caps)."""

    knot: TwoBridgeKnot
    braid: BraidWord
    Ahat: MultiPoly
    hat_alpha: Optional[MultiPoly]
    match: bool
    status: str
    m_shift: Optional[int] = None
    sign: Optional[int] = None
    mirror: Optional[bool] = None
    riley_irreducible: Optional[bool] = None
    sufficient_condition_met: Optional[bool] = None
    caps: Tuple[int, int, int] = DEFAULT_CAPS
    N: int = DEFAULT_N
    operator_caps: Optional[Tuple[int, int, int]] = None
    operator_balance: Optional[Tuple[int, int, int]] = None
    timings: Dict[str, float] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def to_json(self, with_timings: bool = True) -> dict:
        out = {
            "knot": self.knot.name,
            "braid": self.braid.to_json(),
            "Ahat": self.Ahat.to_json(),
            "hat_alpha": self.hat_alpha.to_json() if self.hat_alpha is not None else None,
            "match": self.match,
            "status": self.status,
            "m_shift": self.m_shift,
            "sign": self.sign,
            "mirror": self.mirror,
            "riley_irreducible": self.riley_irreducible,
            "sufficient_condition_met": self.sufficient_condition_met,
            "caps": list(self.caps),
            "N": self.N,
            "operator_caps": list(self.operator_caps) if self.operator_caps else None,
            "operator_balance": list(self.operator_balance) if self.operator_balance else None,
            "notes": list(self.notes),
        }
        if with_timings:
            out["timings"] = {k: round(v, 3) for k, v in self.timings.items()}
        return out


def riley_irreducible(K: TwoBridgeKnot) -> bool:
    """Is the Riley polynomial irreducible over Q (as a polynomial in s and u)?"""
    factors = factor_biv_Q(riley_polynomial(K).phi)
    return len(factors) == 1 and factors[0][1] == 1


def _is_prime(p: int) -> bool:
    return p > 1 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def match_up_to_m(hat_alpha: MultiPoly, Ahat: MultiPoly) -> Optional[Tuple[int, int]]:
    """``(m_shift, sign)`` with ``m^shift * core = sign * Ahat`` after primitive
    normalization, where ``core`` is ``hat_alpha`` without its m-only factors."""
    core = remove_single_variable_factors(hat_alpha.with_vars(ML_VARS), "m").primitive()
    target = Ahat.with_vars(ML_VARS).primitive()
    span = 2 * max(core.degree("m"), target.degree("m"), 1)
    m = MultiPoly({(1, 0): 1}, ML_VARS)
    for shift in range(-span, span + 1):
        for sign in (1, -1):
            if shift >= 0:
                if core * m ** shift == target * sign:
                    return shift, sign
            elif core == target * sign * m ** (-shift):
                return shift, sign
    return None


def aj_verify(K: TwoBridgeKnot, braid: Optional[BraidWord] = None, N: int = DEFAULT_N,
              caps: Tuple[int, int, int] = DEFAULT_CAPS, cache: Optional[str] = None,
              table: Optional[ColoredJonesTable] = None) -> AJReport:
    """Compare Ahat from elimination with alpha-hat from the colored Jones recurrence.

    The braid closure is only known up to mirror image, so the comparison is
    made against Ahat and against its mirror ``Ahat(m, 1/l)``.  A missing
    recurrence gives ``status = "inconclusive"``; it is never reported as a
    mismatch.
    """
    timings = {}
    if braid is None:
        braid = lookup(K).braid
    start = time.perf_counter()
    report = a_polynomial(K)
    timings["apoly"] = time.perf_counter() - start

    start = time.perf_counter()
    irreducible = riley_irreducible(K)
    timings["riley"] = time.perf_counter() - start
    if _is_prime(K.p) and not irreducible:
        raise AJAssertionError(f"Riley polynomial of {K.name} is reducible although p is prime")

    out = AJReport(K, braid, report.Ahat, None, False, "inconclusive", caps=tuple(caps), N=N,
                   riley_irreducible=irreducible, sufficient_condition_met=irreducible, timings=timings)
    start = time.perf_counter()
    if table is None:
        table = jones_table(braid, N, cache)
    timings["jones"] = time.perf_counter() - start

    start = time.perf_counter()
    try:
        op = minimal_recurrence(table, tuple(caps))
    except RecurrenceNotFound as exc:
        timings["recurrence"] = time.perf_counter() - start
        out.notes.append(str(exc))
        return out
    timings["recurrence"] = time.perf_counter() - start
    out.operator_caps = op.caps
    out.operator_balance = operator_balance_check(op)
    witness = specialize_and_quotient(op)
    out.hat_alpha = witness.hat_alpha
    if witness.balanced_cert is None:
        raise AJAssertionError("alpha(-1) is not balanced")

    for mirror, target in ((False, report.Ahat), (True, mirror_transform(report.Ahat))):
        found = match_up_to_m(witness.hat_alpha, target)
        if found is not None:
            out.match, out.status, out.mirror = True, "match", mirror
            out.m_shift, out.sign = found
            break
    else:
        out.status = "mismatch"
    return out


# ---------------------------------------------------------------------------
# surveys


@dataclass
class RileyRow:
    p: int
    q: int
    irreducible: bool
    degree: int
    asserted: bool

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "irreducible": self.irreducible,
                "u_degree": self.degree, "asserted": self.asserted}


def survey_riley(p_max: int) -> List[RileyRow]:
    """Irreducibility of the Riley polynomial for every b(p, q) with odd q, 3 <= p <= p_max.

    Irreducibility is asserted for prime p; composite p rows are informational.
    """
    if p_max > 60:
        raise ValueError("p_max above 60 is outside the survey budget")
    rows = []
    for p in range(3, p_max + 1, 2):
        for q in range(1, p - 1, 2):
            if gcd(p, q) != 1:
                continue
            K = TwoBridgeKnot(p, q)
            phi = riley_polynomial(K)
            irreducible = riley_irreducible(K)
            asserted = _is_prime(p)
            if asserted and not irreducible:
                raise AJAssertionError(f"Riley polynomial of {K.name} is reducible although p is prime")
            if phi.u_degree != (p - 1) // 2:
                raise AJAssertionError(f"Riley polynomial of {K.name} has u-degree {phi.u_degree}")
            rows.append(RileyRow(p, q, irreducible, phi.u_degree, asserted))
    return rows


@dataclass
class DegreeRow:
    p: int
    q: int
    m_degree: int
    l_degree: int
    candidate_d: List[int]
    passed: bool

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "m_degree": self.m_degree, "l_degree": self.l_degree,
                "candidate_d": self.candidate_d, "passed": self.passed}


def degree_survey(p_max: int) -> List[DegreeRow]:
    """Degree bounds for every hyperbolic catalog knot with p <= p_max."""
    from .cjones import load_catalog

    if p_max > 25:
        raise ValueError("p_max above 25 is outside the survey budget")
    rows = []
    for entry in load_catalog():
        K = entry.knot
        if K.p > p_max or not K.is_hyperbolic:
            continue
        check = degree_bound_check(K)
        rows.append(DegreeRow(K.p, K.q, check.m_degree, check.l_degree, check.candidate_d, check.passed))
    return sorted(rows, key=lambda r: (r.p, r.q))
